#include "gorstab/germ.hpp"

#include "gorstab/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorstab {

namespace {

constexpr int kMaxDepth = 64;

void require_local(const WPoly& f) {
  if (f.ring()->size() != 2) throw RingMismatch("germs live in a ring with two variables");
}

// x^a y^b -> x^(a+b-ord) y^b  (chart x = x, y = x*t)
WPoly chart_x(const WPoly& f, int ord) {
  WPoly out(f.ring());
  for (const auto& [e, c] : f.terms()) out.add_term({e[0] + e[1] - ord, e[1]}, c);
  return out;
}

// x^a y^b -> x^a y^(a+b-ord)  (chart x = s*y, y = y)
WPoly chart_y(const WPoly& f, int ord) {
  WPoly out(f.ring());
  for (const auto& [e, c] : f.terms()) out.add_term({e[0], e[0] + e[1] - ord}, c);
  return out;
}

WPoly shift_y(const WPoly& f, const Rational& t0) {
  if (is_zero(t0)) return f;
  const RingPtr& r = f.ring();
  return substitute(f, std::vector<WPoly>{WPoly::variable(r, 0), WPoly::variable(r, 1) + WPoly(r, t0)});
}

// Leading form f_m(1, t) as a polynomial in t.
UPoly leading_form_in_t(const WPoly& f) {
  int m = f.order();
  std::vector<Rational> c(m + 1, Rational(0));
  for (const auto& [e, coeff] : f.terms())
    if (e[0] + e[1] == m) c[e[1]] = coeff;
  return UPoly(std::move(c));
}

void resolve(const GermChart& g, ResolutionLedger& ledger) {
  if (g.depth > kMaxDepth) throw std::runtime_error("resolution did not terminate");
  if (is_snc_at_origin(g)) return;
  BlowUp b = blow_up(g);
  ledger.multiplicity_sequence.push_back(b.center_multiplicity);
  ledger.nodes.push_back({g.depth, b.center_multiplicity, b.created.k, b.created.m});
  for (const auto& p : b.points) resolve(p, ledger);
}

}  // namespace

int multiplicity(const WPoly& f) { return f.order(); }

int ExceptionalCurve::total_m() const {
  int s = 0;
  for (int v : m) s += v;
  return s;
}

GermChart::GermChart(std::vector<WPoly> fs) : GermChart(std::move(fs), {}, 0) {}

GermChart::GermChart(std::vector<WPoly> fs, std::vector<ExceptionalCurve> ex, int d)
    : factors(std::move(fs)), through_origin(std::move(ex)), depth(d) {
  if (factors.empty()) throw std::invalid_argument("germ chart without factors");
  for (const auto& f : factors) {
    require_local(f);
    if (f.is_zero()) throw std::invalid_argument("zero germ");
  }
}

WPoly GermChart::product() const {
  WPoly p = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) p *= factors[i];
  return p;
}

bool is_snc_at_origin(const GermChart& g) {
  WPoly f = g.product();
  if (!is_zero(f.constant_term())) return true;
  if (f.order() > 1) return false;
  switch (g.through_origin.size()) {
    case 0:
      return true;
    case 1:
      // smooth curve transversal to the exceptional axis
      return g.through_origin.front().axis == 0 ? !is_zero(f.coefficient({0, 1}))
                                                 : !is_zero(f.coefficient({1, 0}));
    default:
      return false;
  }
}

BlowUp blow_up(const GermChart& g) {
  WPoly f = g.product();
  if (!is_zero(f.constant_term())) throw std::invalid_argument("blow-up centre is not on the curve");
  BlowUp out;
  out.center_multiplicity = f.order();

  out.created.k = 1;
  out.created.m.assign(g.factors.size(), 0);
  std::vector<int> orders;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    orders.push_back(g.factors[i].order());
    out.created.m[i] = orders[i];
  }
  const ExceptionalCurve* old_x = nullptr;  // {x=0}
  const ExceptionalCurve* old_y = nullptr;  // {y=0}
  for (const auto& e : g.through_origin) {
    out.created.k += e.k;
    for (std::size_t i = 0; i < e.m.size(); ++i) out.created.m[i] += e.m[i];
    (e.axis == 0 ? old_x : old_y) = &e;
  }

  std::vector<WPoly> in_x, in_y;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    in_x.push_back(chart_x(g.factors[i], orders[i]));
    in_y.push_back(chart_y(g.factors[i], orders[i]));
  }

  UPoly lead = leading_form_in_t(f);
  RootSplit roots = split_rational_roots(lead);
  if (roots.rest.degree() > 0) {
    if (!roots.rest_squarefree)
      throw std::domain_error("strict transform is tangent to the exceptional curve at an irrational point");
    out.irrational_points = roots.rest.degree();
  }
  for (const auto& r : roots.rational) {
    std::vector<WPoly> fs;
    for (const auto& h : in_x) fs.push_back(shift_y(h, r.value));
    ExceptionalCurve e = out.created;
    e.axis = 0;
    std::vector<ExceptionalCurve> ex{e};
    if (is_zero(r.value) && old_y) ex.push_back(*old_y);
    out.points.emplace_back(std::move(fs), std::move(ex), g.depth + 1);
  }
  // Direction x = 0 of the tangent cone sits at the origin of the second chart.
  if (lead.degree() < out.center_multiplicity) {
    ExceptionalCurve e = out.created;
    e.axis = 1;
    std::vector<ExceptionalCurve> ex{e};
    if (old_x) ex.push_back(*old_x);
    out.points.emplace_back(in_y, std::move(ex), g.depth + 1);
  }
  return out;
}

void require_reduced_germ(const WPoly& f) {
  require_local(f);
  if (f.is_zero()) throw std::invalid_argument("zero germ");
  if (!is_zero(f.constant_term())) throw std::invalid_argument("germ does not pass through the origin");
  WPoly g = gcd(gcd(f, partial_derivative(f, 0)), partial_derivative(f, 1));
  if (!g.is_constant() && is_zero(g.constant_term()))
    throw std::invalid_argument("germ is not reduced at the origin");
}

ResolutionLedger resolution_tree(const WPoly& f) {
  require_reduced_germ(f);
  return resolution_tree(std::vector<WPoly>{f});
}

ResolutionLedger resolution_tree(const std::vector<WPoly>& factors) {
  GermChart g(factors);
  ResolutionLedger ledger;
  resolve(g, ledger);
  if (ledger.multiplicity_sequence.empty()) ledger.multiplicity_sequence.push_back(g.product().order());
  return ledger;
}

Rational lct(const ResolutionLedger& ledger) {
  Rational best = 1;
  for (const auto& n : ledger.nodes) {
    int m = 0;
    for (int v : n.m) m += v;
    best = std::min(best, make_rational(n.k + 1, m));
  }
  return best;
}

Rational lct(const WPoly& f) { return lct(resolution_tree(f)); }

bool is_log_canonical(const std::vector<WPoly>& factors, const std::vector<Rational>& coeffs) {
  if (factors.size() != coeffs.size()) throw std::invalid_argument("one coefficient per factor expected");
  for (const auto& c : coeffs)
    if (c > 1) return false;
  std::vector<WPoly> through;
  std::vector<Rational> cs;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (is_zero(factors[i].constant_term()) && !is_zero(coeffs[i])) {
      through.push_back(factors[i]);
      cs.push_back(coeffs[i]);
    }
  }
  if (through.empty()) return true;
  WPoly prod = through.front();
  for (std::size_t i = 1; i < through.size(); ++i) prod *= through[i];
  require_reduced_germ(prod);
  for (const auto& n : resolution_tree(through).nodes) {
    Rational weight = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) weight += cs[i] * n.m[i];
    if (weight > n.k + 1) return false;
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Smooth: return "smooth";
    case Verdict::Negligible: return "negligible";
    case Verdict::EllipticDeg1: return "elliptic_deg1";
    case Verdict::EllipticDeg2: return "elliptic_deg2";
    case Verdict::EllipticDeg4: return "elliptic_deg4";
    case Verdict::QuarterPoint: return "quarter_point";
    case Verdict::NotSlc: return "not_slc";
    case Verdict::OtherLc: return "lc_but_uncataloged";
  }
  return "unknown";
}

Verdict verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::Smooth, Verdict::Negligible, Verdict::EllipticDeg1, Verdict::EllipticDeg2,
                    Verdict::EllipticDeg4, Verdict::QuarterPoint, Verdict::NotSlc, Verdict::OtherLc})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

std::vector<Direction> tangent_directions(const WPoly& f) {
  std::vector<Direction> out;
  if (!is_zero(f.constant_term())) return out;
  UPoly lead = leading_form_in_t(f);
  for (const auto& r : split_rational_roots(lead).rational) out.emplace_back(r.value, 1);
  if (lead.degree() < f.order()) out.emplace_back(1, 0);
  return out;
}

SingularityReport classify_branch_point(const WPoly& f) {
  ResolutionLedger ledger = resolution_tree(f);
  SingularityReport rep;
  rep.multiplicity_sequence = ledger.multiplicity_sequence;
  rep.lct = lct(ledger);
  rep.tangents = tangent_directions(f);

  const int m = f.order();
  if (m == 1) {
    rep.verdict = Verdict::Smooth;
    return rep;
  }
  if (rep.lct < Rational(1, 2)) {
    rep.verdict = Verdict::NotSlc;
    return rep;
  }
  // Infinitely near multiplicities, split by first neighbourhood.
  int later_max = 0, first_triples = 0, deep_max = 0;
  for (std::size_t i = 1; i < ledger.nodes.size(); ++i) {
    const auto& n = ledger.nodes[i];
    later_max = std::max(later_max, n.multiplicity);
    if (n.depth == 1 && n.multiplicity == 3) ++first_triples;
    else deep_max = std::max(deep_max, n.multiplicity);
  }
  if ((m == 2 || m == 3) && later_max <= 2) rep.verdict = Verdict::Negligible;
  else if (m == 4 && later_max <= 2) rep.verdict = Verdict::EllipticDeg2;
  else if (m == 3 && first_triples == 1 && deep_max <= 2) rep.verdict = Verdict::EllipticDeg1;
  else rep.verdict = Verdict::OtherLc;
  return rep;
}

bool is_elliptic_deg4_pair(const WPoly& f1, const WPoly& f2) {
  for (const auto* f : {&f1, &f2})
    if (!is_zero(f->constant_term()) || f->order() != 2) return false;
  WPoly q1 = f1.homogeneous_part(2), q2 = f2.homogeneous_part(2);
  return is_squarefree(q1) && is_squarefree(q2) && gcd(q1, q2).is_constant();
}

}  // namespace gorstab
