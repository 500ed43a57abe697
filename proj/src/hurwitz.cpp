#include "gorstab/hurwitz.hpp"

#include <stdexcept>

namespace gorstab {

namespace {

WPoly at_vertex(const WPoly& c) {
  RingPtr loc = ring_local();
  return substitute(c, std::vector<WPoly>{WPoly::variable(loc, 0), WPoly::variable(loc, 1), WPoly(loc, 1)});
}

}  // namespace

int vertex_order(const std::vector<BranchComponent>& components) {
  int m = 0;
  for (const auto& c : components) {
    WPoly g = at_vertex(c.poly);
    if (is_zero(g.constant_term())) m += c.multiplicity * g.order();
  }
  return m;
}

HurwitzReport check_hurwitz_slc(const std::vector<BranchComponent>& components,
                                const std::vector<PointWPS>& extra_points, std::optional<int> expected_degree) {
  if (components.empty()) throw std::invalid_argument("empty branch divisor");
  HurwitzReport rep;
  const RingPtr& ring = components.front().poly.ring();
  const auto& weights = ring->weights();
  if (weights.size() != 3 || weights[0] != 1 || weights[1] != 1)
    throw RingMismatch("branch divisors live on P(1,1,w)");
  const int w = weights[2];

  std::vector<WPoly> support;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (!(*c.poly.ring() == *ring)) throw RingMismatch("branch components live in different rings");
    if (c.multiplicity < 1) throw std::invalid_argument("component multiplicity must be positive");
    auto d = weighted_degree(c.poly);
    if (!d) throw std::invalid_argument("component " + std::to_string(i) + " is not homogeneous");
    if (*d == 0) throw std::invalid_argument("component " + std::to_string(i) + " is a constant");
    if (!is_squarefree(c.poly)) throw std::invalid_argument("component " + std::to_string(i) + " is not reduced");
    for (std::size_t j = 0; j < i; ++j)
      if (!gcd(support[j], c.poly).is_constant())
        throw std::invalid_argument("components " + std::to_string(j) + " and " + std::to_string(i) +
                                    " share a common factor");
    rep.total_degree += c.multiplicity * *d;
    if (c.multiplicity > 1) rep.reduced = false;
    if (c.multiplicity > 2 && rep.log_canonical) {
      rep.log_canonical = false;
      rep.failure = "component " + std::to_string(i) + " has multiplicity " + std::to_string(c.multiplicity);
    }
    support.push_back(c.poly);
  }
  if (expected_degree && rep.total_degree != *expected_degree)
    throw std::invalid_argument("branch divisor has degree " + std::to_string(rep.total_degree) + ", expected " +
                                std::to_string(*expected_degree));

  LocateResult loc = locate_singular_points(support);
  rep.certified_nodes = loc.certified_nodes;
  rep.warnings = loc.warnings;
  std::vector<PointWPS> candidates = loc.points;
  for (const auto& p : extra_points) {
    if (p.y_weight() != w) throw std::invalid_argument("extra point in the wrong ambient space");
    if (p.is_vertex() && w > 1) continue;
    bool seen = false;
    for (const auto& q : candidates) seen = seen || q == p;
    if (!seen) candidates.push_back(p);
  }

  for (const auto& p : candidates) {
    std::vector<WPoly> factors;
    std::vector<Rational> coeffs;
    PointReport pr{p, {}, {}, true};
    for (std::size_t i = 0; i < components.size(); ++i) {
      WPoly g = localize(components[i].poly, p);
      if (!is_zero(g.constant_term())) continue;
      pr.components.push_back(i);
      factors.push_back(g);
      coeffs.push_back(make_rational(components[i].multiplicity, 2));
    }
    if (factors.empty()) continue;
    WPoly germ = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) germ *= factors[i];
    if (germ.order() < 2) continue;
    try {
      pr.report = classify_branch_point(germ);
      pr.log_canonical = is_log_canonical(factors, coeffs);
    } catch (const std::domain_error& e) {
      rep.warnings.push_back("point " + p.to_string() + ": " + e.what());
      continue;
    }
    if (!pr.log_canonical) {
      pr.report.verdict = Verdict::NotSlc;
      if (rep.log_canonical) {
        rep.log_canonical = false;
        rep.failure = "not log canonical at " + p.to_string();
      }
    }
    rep.points.push_back(std::move(pr));
  }

  if (w > 1) {
    rep.vertex_order = vertex_order(components);
    if (rep.vertex_order % 2 != 0 && w == 2)
      throw std::logic_error("odd intersection order at the vertex");
    if (rep.vertex_order > 4 && rep.log_canonical) {
      rep.log_canonical = false;
      rep.failure = "order " + std::to_string(rep.vertex_order) + " at the vertex";
    }
  }
  return rep;
}

}  // namespace gorstab
