#include "gorstab/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorstab {

namespace {

struct ResolutionLabel {
  const char* stratum;
  const char* resolution;
  const char* kodaira;
};

// Minimal resolution and Kodaira dimension per stratum of normal Gorenstein members.
constexpr ResolutionLabel kNormalStrata[] = {
    {"N_empty", "general type", "2"},
    {"N_2", "blow up of a K3 surface", "0"},
    {"N_1", "minimal elliptic surface with chi = 2", "1"},
    {"N_2,2", "rational surface", "-inf"},
    {"N_1,2", "rational surface", "-inf"},
    {"N_1,1^R", "rational surface", "-inf"},
    {"N_1,1^E", "blow up of an Enriques surface", "0"},
    {"N_1,1,2", "ruled surface with chi = 0", "-inf"},
    {"N_1,1,1", "ruled surface with chi = 0", "-inf"},
};

constexpr ResolutionLabel kNonNormal[] = {
    {"dP", "del Pezzo surface of degree 1", "-inf"},
    {"P", "P^2", "-inf"},
    {"E-", "minimal ruled surface with chi = 0", "-inf"},
};

template <std::size_t N>
const ResolutionLabel& lookup(const ResolutionLabel (&table)[N], const std::string& key) {
  for (const auto& row : table)
    if (key == row.stratum) return row;
  throw std::logic_error("no resolution label for " + key);
}

int elliptic_degree(Verdict v) {
  switch (v) {
    case Verdict::EllipticDeg1: return 1;
    case Verdict::EllipticDeg2: return 2;
    case Verdict::EllipticDeg4: return 4;
    default: return 0;
  }
}

// A weighted degree 2 section through both points with the given tangents.
bool matching_tangent_section(const PointReport& a, const PointReport& b, const RingPtr& ring) {
  if (a.report.tangents.size() != 1 || b.report.tangents.size() != 1) return false;
  auto dim = linear_system_dim({ConditionSpec::tangent_to(a.point, a.report.tangents.front()),
                                ConditionSpec::tangent_to(b.point, b.report.tangents.front())},
                               ring, 2);
  return dim.projective_dim >= 0;
}

std::string stratum_name(std::vector<int> degrees, bool matching) {
  std::sort(degrees.begin(), degrees.end());
  if (degrees.empty()) return "N_empty";
  std::string s = "N_";
  for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
  if (degrees == std::vector<int>{1, 1}) s += matching ? "^E" : "^R";
  return s;
}

HurwitzReport lc_or_throw(const std::vector<BranchComponent>& delta, const std::vector<PointWPS>& extra = {},
                          std::optional<int> degree = 10) {
  HurwitzReport h = check_hurwitz_slc(delta, extra, degree);
  if (!h.log_canonical) throw NotLogCanonical(h.failure);
  return h;
}

}  // namespace

VertexBehavior vertex_behavior(const std::vector<BranchComponent>& delta) {
  VertexBehavior vb;
  vb.order = vertex_order(delta);
  if (vb.order % 2 != 0) throw std::logic_error("odd intersection order at the vertex");
  switch (vb.order) {
    case 0: vb.label = "smooth"; break;
    case 2: vb.label = "quarter_point"; break;
    case 4: vb.label = "z2_quotient_elliptic"; break;
    default: throw NotLogCanonical("order " + std::to_string(vb.order) + " at the vertex");
  }
  return vb;
}

CoverReport double_cover_report(const std::vector<BranchComponent>& delta, const std::vector<PointWPS>& extra_points) {
  HurwitzReport h = lc_or_throw(delta, extra_points);
  const RingPtr& ring = delta.front().poly.ring();
  CoverReport rep;
  rep.K2 = 1;
  // chi(O_Q) + chi(O_Q(-5)), the latter dual to H^0(O_Q(1)).
  rep.chi = 1 + static_cast<int>(monomial_basis(*ring, 1).size());
  VertexBehavior vb = vertex_behavior(delta);
  rep.vertex = vb.label;
  rep.cartier_index = vb.order == 0 ? 1 : 2;
  rep.gorenstein = rep.cartier_index == 1;
  rep.normal = h.reduced;
  rep.certified_nodes = h.certified_nodes;
  rep.warnings = h.warnings;

  std::vector<const PointReport*> elliptic11;
  for (const auto& p : h.points) {
    if (p.report.verdict == Verdict::Smooth) continue;
    rep.singularities.push_back({p.point.to_string(), p.report.verdict, p.report.multiplicity_sequence, p.report.lct});
    if (int e = elliptic_degree(p.report.verdict)) {
      rep.elliptic_degrees.push_back(e);
      if (e == 1) elliptic11.push_back(&p);
    }
  }
  if (vb.order == 2) rep.singularities.push_back({"0:0:1", Verdict::QuarterPoint, {}, 1});
  std::sort(rep.elliptic_degrees.begin(), rep.elliptic_degrees.end());

  if (!rep.normal) {
    rep.normalisation_type = normalisation_type(delta);
    const auto& row = lookup(kNonNormal, *rep.normalisation_type);
    rep.minimal_resolution = row.resolution;
    rep.kodaira_dimension = row.kodaira;
  } else if (rep.gorenstein) {
    bool matching = elliptic11.size() == 2 && rep.elliptic_degrees.size() == 2 &&
                    matching_tangent_section(*elliptic11[0], *elliptic11[1], ring);
    rep.stratum = stratum_name(rep.elliptic_degrees, matching);
    for (const auto& row : kNormalStrata)
      if (*rep.stratum == row.stratum) {
        rep.minimal_resolution = row.resolution;
        rep.kodaira_dimension = row.kodaira;
      }
    if (rep.minimal_resolution.empty()) rep.warnings.push_back("elliptic configuration outside the known strata");
  } else if (vb.order == 2) {
    rep.minimal_resolution = "properly elliptic surface";
    rep.kodaira_dimension = "1";
  }
  return rep;
}

std::string normalisation_type(const std::vector<BranchComponent>& delta) {
  std::vector<BranchComponent> delta0;
  int deg1 = 0;
  for (const auto& c : delta) {
    if (c.multiplicity >= 3) throw std::invalid_argument("component of multiplicity " + std::to_string(c.multiplicity));
    if (c.multiplicity == 2) deg1 += weighted_degree(c.poly).value_or(0);
    else delta0.push_back(c);
  }
  if (deg1 == 0) throw std::invalid_argument("branch divisor is reduced");
  lc_or_throw(delta);
  if (deg1 % 2 != 0) throw std::domain_error("doubled part is not a multiple of the hyperplane class");
  const int k = deg1 / 2;
  if (k == 2) return "P";
  if (k != 1) throw std::domain_error("doubled part of unexpected degree " + std::to_string(deg1));
  HurwitzReport h0 = check_hurwitz_slc(delta0, {}, std::nullopt);
  for (const auto& p : h0.points)
    if (p.report.verdict == Verdict::EllipticDeg1) return "E-";
  return "dP";
}

// Plane helpers shared with the bi-double code.

WPoly restrict_to_line(const WPoly& form, const WPoly& line) {
  if (weighted_degree(line).value_or(0) != 1) throw std::invalid_argument("not a line");
  const RingPtr& ring = form.ring();
  std::size_t k = ring->size();
  while (k-- > 0)
    if (line.depends_on(k)) break;
  Rational c = line.coefficient_in(k, 1).constant_term();
  std::vector<WPoly> images;
  for (std::size_t i = 0; i < ring->size(); ++i) images.push_back(WPoly::variable(ring, i));
  images[k] = (WPoly::variable(ring, k) * c - line) * (Rational(1) / c);
  return substitute(form, images);
}

RootProfile binary_root_profile(const WPoly& form) {
  if (form.is_zero()) throw std::invalid_argument("zero form has no root profile");
  RootProfile rp;
  if (form.is_constant()) return rp;
  WPoly sq = squarefree_part(form);
  WPoly repeated = form;
  for (std::size_t i = 0; i < form.ring()->size(); ++i) repeated = gcd(repeated, partial_derivative(form, i));
  rp.distinct = sq.total_degree();
  rp.simple = rp.distinct - (repeated.is_constant() ? 0 : squarefree_part(repeated).total_degree());
  return rp;
}

}  // namespace gorstab
