#include "gorstab/strata.hpp"

#include "gorstab/matrix.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace gorstab {

namespace {

using Field = std::array<WPoly, 3>;

std::vector<Field> basis_fields() {
  RingPtr r = ring_p112();
  WPoly x0 = WPoly::variable(r, 0), x1 = WPoly::variable(r, 1), y = WPoly::variable(r, 2), z(r);
  return {
      {x0, z, z}, {x1, z, z}, {z, x0, z}, {z, x1, z}, {z, z, y}, {z, z, x0 * x0}, {z, z, x0 * x1}, {z, z, x1 * x1},
  };
}

// Field induced on the affine chart at p, in the local coordinates of localize().
std::array<WPoly, 2> in_chart(const Field& v, const PointWPS& p) {
  RingPtr r = ring_p112();
  LocalChart ch = chart_at(p);
  WPoly lx0 = localize(WPoly::variable(r, 0), p), lx1 = localize(WPoly::variable(r, 1), p),
        ly = localize(WPoly::variable(r, 2), p);
  WPoly p0 = localize(v[0], p), p1 = localize(v[1], p), p2 = localize(v[2], p);
  if (ch.fixed == 0) return {p1 - lx1 * p0, p2 - ly * p0 * Rational(2)};
  return {p0 - lx0 * p1, p2 - ly * p1 * Rational(2)};
}

Rational lin(const WPoly& f, int var) { return f.coefficient(var == 0 ? Exponent{1, 0} : Exponent{0, 1}); }

void require_smooth(const PointWPS& p) {
  if (p.y_weight() != 2) throw RingMismatch("stabilizers are computed on P(1,1,2)");
  if (p.is_vertex()) throw std::domain_error("stabilizers at the vertex are not supported");
}

WPoly lie_derivative(const Field& v, const WPoly& h) {
  WPoly out(h.ring());
  for (std::size_t i = 0; i < 3; ++i) out += v[i] * partial_derivative(h, i);
  return out;
}

}  // namespace

ConfigItem ConfigItem::at(PointWPS p) { return {ConfigKind::Point, std::move(p), {}, {}}; }
ConfigItem ConfigItem::along(PointWPS p, Direction t) { return {ConfigKind::Direction, std::move(p), t, {}}; }
ConfigItem ConfigItem::curve(WPoly h) { return {ConfigKind::Section, {}, {}, std::move(h)}; }

int stabilizer_dim(const std::vector<ConfigItem>& config) {
  const std::vector<Field> fields = basis_fields();
  std::size_t sections = 0;
  for (const auto& c : config) sections += c.kind == ConfigKind::Section;
  const std::size_t cols = kAutParameters + sections;
  Matrix rows;
  std::size_t mu = kAutParameters;

  for (const auto& item : config) {
    if (item.kind == ConfigKind::Section) {
      const WPoly& h = *item.section;
      if (!(*h.ring() == *ring_p112())) throw RingMismatch("sections live on P(1,1,2)");
      if (!is_homogeneous(h) || h.is_constant()) throw std::invalid_argument("section must be a nonconstant form");
      // v(h) - mu h = 0, one row per monomial
      std::map<Exponent, Row> by_monomial;
      auto row_for = [&](const Exponent& e) -> Row& {
        auto it = by_monomial.find(e);
        if (it == by_monomial.end()) it = by_monomial.emplace(e, Row(cols)).first;
        return it->second;
      };
      for (std::size_t k = 0; k < fields.size(); ++k) {
        const WPoly vh = lie_derivative(fields[k], h);
        for (const auto& [e, c] : vh.terms()) row_for(e)[k] += c;
      }
      for (const auto& [e, c] : h.terms()) row_for(e)[mu] -= c;
      for (auto& [e, row] : by_monomial) rows.push_back(std::move(row));
      ++mu;
      continue;
    }
    const PointWPS& p = *item.point;
    require_smooth(p);
    Row ru(cols), rw(cols), rd(cols);
    for (std::size_t k = 0; k < fields.size(); ++k) {
      auto [U, W] = in_chart(fields[k], p);
      ru[k] = U.constant_term();
      rw[k] = W.constant_term();
      if (item.kind == ConfigKind::Direction) {
        const Direction& t = *item.direction;
        Rational ju = lin(U, 0) * t.dx + lin(U, 1) * t.dy;
        Rational jw = lin(W, 0) * t.dx + lin(W, 1) * t.dy;
        rd[k] = ju * t.dy - jw * t.dx;
      }
    }
    rows.push_back(std::move(ru));
    rows.push_back(std::move(rw));
    if (item.kind == ConfigKind::Direction) rows.push_back(std::move(rd));
  }
  std::size_t r = rows.empty() ? 0 : rank(rows);
  // the Euler field always survives
  return static_cast<int>(cols - r) - 1;
}

StratumDimension stratum_dim(const StratumSpec& spec) {
  StratumDimension d;
  d.system = linear_system_dim(spec.conditions, ring_p112(), spec.degree);
  if (d.system.projective_dim < 0) throw std::domain_error("empty linear system for " + spec.name);
  d.stabilizer = stabilizer_dim(spec.pinned);
  d.dim = d.system.projective_dim - d.stabilizer;
  return d;
}

std::vector<StratumSpec> normal_strata() {
  RingPtr r = ring_p112();
  const PointWPS P(1, 0, 0), Q(0, 1, 0), R(1, 1, 0);
  const Direction flat(0, 1);     // tangent to y = 0
  const Direction other(1, 1);    // neither y = 0 nor a ruling
  const WPoly y = WPoly::variable(r, 2);
  const WPoly x0 = WPoly::variable(r, 0), x1 = WPoly::variable(r, 1);
  const WPoly h1 = x0 * x1 + y, h2 = x0 * x1 - x1 * x1 + y;
  using C = ConditionSpec;
  using I = ConfigItem;
  return {
      {"N_empty", 10, {}, {}, 28},
      {"N_2", 10, {C::quadruple(P)}, {I::at(P)}, 20},
      {"N_1", 10, {C::three_three(P, flat)}, {I::along(P, flat)}, 19},
      {"N_2,2", 10, {C::quadruple(P), C::quadruple(Q)}, {I::at(P), I::at(Q)}, 12},
      {"N_1,2", 10, {C::three_three(P, flat), C::quadruple(Q)}, {I::along(P, flat), I::at(Q)}, 11},
      {"N_1,1^R", 10, {C::three_three(P, flat), C::three_three(Q, other)}, {I::along(P, flat), I::along(Q, other)}, 10},
      {"N_1,1^E", 10, {C::three_three(P, flat), C::three_three(Q, flat)}, {I::at(P), I::at(Q), I::curve(y)}, 10},
      {"N_1,1,2",
       10,
       {C::three_three(P, tangent_of(h1, P)), C::three_three(Q, tangent_of(h1, Q)), C::quadruple(R)},
       {I::along(P, tangent_of(h1, P)), I::at(Q), I::at(R)},
       2},
      {"N_1,1,1",
       10,
       {C::three_three(P, tangent_of(h1, P)), C::three_three(Q, tangent_of(h1, Q)),
        C::three_three(R, tangent_of(h2, R))},
       {I::along(P, tangent_of(h1, P)), I::at(Q), I::at(R)},
       1},
  };
}

std::vector<StratumSpec> nonnormal_strata() {
  RingPtr r = ring_p112();
  const WPoly y = WPoly::variable(r, 2);
  // The [3,3] point of the cubic section sits off the doubled section y = 0.
  const PointWPS P(1, 0, 1);
  const Direction flat(0, 1);
  using I = ConfigItem;
  return {
      {"dP", 6, {}, {I::curve(y)}, 11},
      {"P", 4, {}, {I::curve(y)}, 4},
      {"E", 6, {ConditionSpec::three_three(P, flat)}, {I::curve(y), I::along(P, flat)}, 2},
  };
}

std::vector<PencilSample> n112_dichotomy(const std::vector<Rational>& slopes, int members_per_slope,
                                         std::uint64_t seed) {
  RingPtr r = ring_p112();
  const PointWPS P(1, 0, 0), Q(0, 1, 0), R(1, 1, 0);
  const WPoly h = WPoly::variable(r, 0) * WPoly::variable(r, 1) + WPoly::variable(r, 2);
  std::vector<PencilSample> out;
  for (const auto& s : slopes) {
    std::vector<ConditionSpec> specs{ConditionSpec::three_three(P, tangent_of(h, P)),
                                     ConditionSpec::three_three(Q, Direction(s, 1)), ConditionSpec::quadruple(R)};
    PencilSample ps;
    ps.slope = s;
    ps.projective_dim = linear_system_dim(specs, r, 10).projective_dim;
    for (int i = 0; i < members_per_slope && ps.projective_dim >= 0 && !ps.reduced_member; ++i)
      ps.reduced_member = is_squarefree(general_member(specs, r, 10, seed + static_cast<std::uint64_t>(i)));
    out.push_back(ps);
  }
  return out;
}

}  // namespace gorstab
