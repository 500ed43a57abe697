#include "gorstab/covers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gorstab {

namespace {

void require_plane(const WPoly& p) {
  if (p.ring()->weights() != std::vector<int>{1, 1, 1}) throw RingMismatch("bi-double data lives on P^2");
}

// Distinct components of D0 + D1 + D2 with their multiplicity in each Di.
struct Support {
  std::vector<WPoly> comps;
  std::vector<std::array<int, 3>> mult;

  explicit Support(const BiDoubleData& data) {
    for (int i = 0; i < 3; ++i)
      for (const auto& c : data.D[i]) {
        require_plane(c.poly);
        if (c.multiplicity < 1) throw std::invalid_argument("component multiplicity must be positive");
        WPoly m = c.poly.monic();
        std::size_t k = 0;
        while (k < comps.size() && !(comps[k] == m)) ++k;
        if (k == comps.size()) {
          comps.push_back(m);
          mult.push_back({0, 0, 0});
        }
        mult[k][i] += c.multiplicity;
      }
  }

  int total(std::size_t k) const { return mult[k][0] + mult[k][1] + mult[k][2]; }
};

WPoly product_of(const std::vector<BranchComponent>& cs, const RingPtr& ring) {
  WPoly p(ring, 1);
  for (const auto& c : cs) p *= c.poly;
  return p;
}

// Product of the linear factors of a binary form occurring exactly once.
WPoly simple_part(const WPoly& form) {
  WPoly sq = squarefree_part(form);
  WPoly repeated = form;
  for (std::size_t i = 0; i < form.ring()->size(); ++i) repeated = gcd(repeated, partial_derivative(form, i));
  if (repeated.is_constant()) return sq;
  return divide_exact(sq, squarefree_part(repeated));
}

int degree_of(const WPoly& p) { return p.is_constant() ? 0 : p.total_degree(); }

std::string point_label(const PointWPS& p) {
  // Plane points print as (y0:y1:y2).
  return p.normalized().to_string();
}

const char* kGeneralType = "general type";

}  // namespace

int BiDoubleData::degree(int i) const {
  int d = 0;
  for (const auto& c : D.at(i)) d += c.multiplicity * weighted_degree(c.poly).value_or(0);
  return d;
}

BiDoubleNumbers bidouble_numbers(const std::array<int, 3>& d) {
  BiDoubleNumbers n;
  n.d = d;
  for (int i = 0; i < 3; ++i) {
    if (d[i] < 0) throw std::invalid_argument("negative degree");
    if ((d[i] - d[(i + 1) % 3]) % 2 != 0) throw std::invalid_argument("degrees of D0, D1, D2 differ in parity");
  }
  int s = 0;
  for (int i = 0; i < 3; ++i) {
    n.a[i] = (d[(i + 1) % 3] + d[(i + 2) % 3]) / 2;
    s += n.a[i] * (n.a[i] - 3);
  }
  n.chi = 4 + s / 2;  // s is always even: a(a-3) is
  n.two_k_degree = d[0] + d[1] + d[2] - 6;
  n.K2 = n.two_k_degree * n.two_k_degree;
  return n;
}

bool bidouble_common_point(const BiDoubleData& data) {
  for (int i = 0; i < 3; ++i) {
    if (data.D[i].empty()) return false;
  }
  for (int i = 0; i < 3; ++i) {
    bool lines = std::all_of(data.D[i].begin(), data.D[i].end(),
                             [](const BranchComponent& c) { return weighted_degree(c.poly).value_or(0) == 1; });
    if (!lines) continue;
    const RingPtr& ring = data.D[i].front().poly.ring();
    WPoly pj = product_of(data.D[(i + 1) % 3], ring), pk = product_of(data.D[(i + 2) % 3], ring);
    for (const auto& l : data.D[i]) {
      WPoly rj = restrict_to_line(pj, l.poly), rk = restrict_to_line(pk, l.poly);
      if (rj.is_zero() || rk.is_zero()) return true;
      if (!gcd(rj, rk).is_constant()) return true;
    }
    return false;
  }
  throw std::domain_error("common point test needs one of D0, D1, D2 to be a union of lines");
}

BiDoubleData bidouble_normalise(const BiDoubleData& data) {
  BiDoubleData reduced;
  for (int i = 0; i < 3; ++i)
    for (const auto& c : data.D[i])
      if (c.multiplicity % 2 == 1) reduced.D[i].push_back({c.poly, 1});
  Support s(reduced);
  BiDoubleData out;
  for (std::size_t k = 0; k < s.comps.size(); ++k) {
    int present = 0;
    for (int i = 0; i < 3; ++i) present += s.mult[k][i] > 0;
    if (present == 3) continue;
    if (present == 2) {
      for (int i = 0; i < 3; ++i)
        if (s.mult[k][i] == 0) out.D[i].push_back({s.comps[k], 1});
      continue;
    }
    for (int i = 0; i < 3; ++i)
      if (s.mult[k][i] > 0) out.D[i].push_back({s.comps[k], 1});
  }
  return out;
}

CoverReport bidouble_report(const BiDoubleData& data) {
  BiDoubleNumbers n = bidouble_numbers({data.degree(0), data.degree(1), data.degree(2)});
  Support s(data);
  if (s.comps.empty()) throw std::invalid_argument("empty branch data");

  std::vector<BranchComponent> hurwitz;
  bool normal = true;
  for (std::size_t k = 0; k < s.comps.size(); ++k) {
    int t = s.total(k);
    if (t > 2) throw std::invalid_argument("Hurwitz divisor has a component of multiplicity > 1");
    if (t == 2) normal = false;
    hurwitz.push_back({s.comps[k], t});
  }
  HurwitzReport h = check_hurwitz_slc(hurwitz, {}, std::nullopt);
  if (!h.log_canonical) throw NotLogCanonical(h.failure);

  CoverReport rep;
  rep.K2 = n.K2;
  rep.chi = n.chi;
  rep.normal = normal;
  rep.gorenstein = !bidouble_common_point(data);
  rep.cartier_index = rep.gorenstein ? 1 : 2;
  rep.certified_nodes = h.certified_nodes;
  rep.warnings = h.warnings;

  int deg1 = 0, deg1_on_d0 = 0, deg4 = 0;
  for (const auto& pr : h.points) {
    std::array<int, 3> ord{0, 0, 0};
    std::array<WPoly, 3> germ{WPoly(ring_local(), 1), WPoly(ring_local(), 1), WPoly(ring_local(), 1)};
    for (std::size_t k : pr.components) {
      WPoly g = localize(s.comps[k], pr.point);
      for (int i = 0; i < 3; ++i)
        if (s.mult[k][i] > 0) {
          ord[i] += g.order();
          germ[i] *= g;
        }
    }
    Verdict v = pr.report.verdict;
    const auto& seq = pr.report.multiplicity_sequence;
    if (seq == std::vector<int>{3} && ord[0] == 1 && ord[1] == 1 && ord[2] == 1) {
      v = Verdict::QuarterPoint;
    } else if (seq == std::vector<int>{4} && std::find(ord.begin(), ord.end(), 3) != ord.end()) {
      v = Verdict::EllipticDeg1;
    } else {
      bool e4 = false;
      for (int i = 0; i < 3 && !e4; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        e4 = ord[i] == 0 && ord[j] == 2 && ord[k] == 2 && is_elliptic_deg4_pair(germ[j], germ[k]);
      }
      if (e4) v = Verdict::EllipticDeg4;
      else if (v != Verdict::Negligible && v != Verdict::Smooth) v = Verdict::OtherLc;
    }
    if (v == Verdict::Smooth) continue;
    if (v == Verdict::EllipticDeg1) {
      ++deg1;
      if (ord[0] > 0) ++deg1_on_d0;
      rep.elliptic_degrees.push_back(1);
    }
    if (v == Verdict::EllipticDeg4) {
      ++deg4;
      rep.elliptic_degrees.push_back(4);
    }
    rep.singularities.push_back({point_label(pr.point), v, seq, pr.report.lct});
  }
  std::sort(rep.elliptic_degrees.begin(), rep.elliptic_degrees.end());

  if (!normal) {
    BiDoubleData nd = bidouble_normalise(data);
    std::array<int, 3> d{nd.degree(0), nd.degree(1), nd.degree(2)};
    int dn = d[0] + d[1] + d[2] - 6;
    if (dn * dn == 9) {
      rep.normalisation_type = "P";
      rep.minimal_resolution = "P^2";
    } else if (dn * dn == 1) {
      CoverReport nr = bidouble_report(nd);
      bool e1 = std::find(nr.elliptic_degrees.begin(), nr.elliptic_degrees.end(), 1) != nr.elliptic_degrees.end();
      rep.normalisation_type = e1 ? "E-" : "dP";
      rep.minimal_resolution = e1 ? "ruled surface with chi = 0" : "del Pezzo surface of degree 1";
    } else {
      throw std::domain_error("normalisation with K^2 = " + std::to_string(dn * dn) + " is outside the known types");
    }
    rep.stratum = "Z^(" + *rep.normalisation_type + ")";
    rep.kodaira_dimension = "-inf";
    return rep;
  }
  if (n.d != std::array<int, 3>{1, 3, 3}) return rep;
  const std::size_t elliptic = rep.elliptic_degrees.size();
  if (elliptic == 0) {
    rep.stratum = "general";
    rep.minimal_resolution = kGeneralType;
    rep.kodaira_dimension = "2";
  } else if (elliptic == 1 && deg1 == 1) {
    rep.stratum = "Z_1";
    rep.minimal_resolution = "minimal elliptic surface";
    rep.kodaira_dimension = "1";
  } else if (elliptic == 2 && deg1 == 2) {
    bool a = deg1_on_d0 == 2;
    rep.stratum = a ? "Z_1,1^A" : "Z_1,1^B";
    rep.minimal_resolution = a ? "blow up of an abelian surface" : "blow up of a bielliptic surface";
    rep.kodaira_dimension = "0";
  } else if (elliptic == 1 && deg4 == 1) {
    rep.stratum = "Z_4";
    rep.minimal_resolution = "rational surface";
    rep.kodaira_dimension = "-inf";
  } else {
    rep.warnings.push_back("elliptic configuration outside the known examples");
  }
  return rep;
}

Z4Report z4_cover_invariants(const WPoly& d1, const WPoly& d2, const WPoly& d3) {
  for (const WPoly* p : {&d1, &d2, &d3}) require_plane(*p);
  const std::array<int, 3> deg{weighted_degree(d1).value_or(-1), weighted_degree(d2).value_or(-1),
                               weighted_degree(d3).value_or(-1)};
  if (deg != std::array<int, 3>{1, 1, 3}) throw std::invalid_argument("expected a line, a line and a cubic");
  const int sum = deg[0] + 2 * deg[1] + 3 * deg[2];
  if (sum % 4 != 0) throw std::invalid_argument("D1 + 2 D2 + 3 D3 is not divisible by 4");
  const int L = sum / 4;

  Z4Report r;
  for (int i = 0; i < 4; ++i) {
    int s = i * L;
    for (int j = 1; j <= 3; ++j) s -= (i * j / 4) * deg[j - 1];
    r.summand_degrees[i] = s;
  }
  std::sort(r.summand_degrees.begin(), r.summand_degrees.end());

  // Ramification order of Dj is the order of j in Z/4.
  Rational twice_delta = 0;
  for (int j = 1; j <= 3; ++j) {
    int order = 4 / std::gcd(j, 4);
    twice_delta += 2 * (Rational(1) - make_rational(1, order)) * deg[j - 1];
  }
  Rational two_k = twice_delta - 6;
  if (two_k.get_den() != 1) throw std::logic_error("2K is not integral");
  r.two_k_degree = static_cast<int>(two_k.get_num().get_si());

  WPoly on_d1 = restrict_to_line(d3, d1);
  WPoly d2_on_d1 = restrict_to_line(d2, d1);
  if (on_d1.is_zero() || d2_on_d1.is_zero()) throw std::invalid_argument("D1 is a component of D2 or D3");
  WPoly q = simple_part(on_d1);
  if (!q.is_constant()) q = divide_exact(q, gcd(q, d2_on_d1));
  r.quarter_points = degree_of(q);
  WPoly on_d2 = restrict_to_line(d1 * d3, d2);
  if (on_d2.is_zero()) throw std::invalid_argument("D2 is a component of D1 or D3");
  r.a1_points = degree_of(simple_part(on_d2));
  r.cartier_index = r.quarter_points > 0 ? 2 : 1;
  return r;
}

}  // namespace gorstab
