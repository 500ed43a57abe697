#include "gorstab/linsys.hpp"

#include <random>
#include <stdexcept>

namespace gorstab {

namespace {

void enumerate(const WeightedRing& ring, std::size_t var, int remaining, Exponent& e,
               std::vector<Exponent>& out) {
  if (var + 1 == ring.size()) {
    if (remaining % ring.weight(var) == 0) {
      e[var] = remaining / ring.weight(var);
      out.push_back(e);
    }
    return;
  }
  for (int k = remaining / ring.weight(var); k >= 0; --k) {
    e[var] = k;
    enumerate(ring, var + 1, remaining - k * ring.weight(var), e, out);
  }
  e[var] = 0;
}

void require_p112(const WeightedRing& ring) {
  if (ring.weights() != std::vector<int>{1, 1, 2})
    throw RingMismatch("expected a ring with weights (1,1,2), got " + ring.to_string());
}

std::vector<Rational> split_coords(std::string_view text, std::size_t expected, char sep) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    auto piece = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    out.push_back(parse_rational(piece));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (out.size() != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) + " coordinates in '" +
                                std::string(text) + "'");
  return out;
}

// Coefficients of the terms of total degree < m, ordered by (degree, x-power desc).
Row low_order_coefficients(const WPoly& local, int m) {
  Row row;
  for (int k = 0; k < m; ++k)
    for (int i = k; i >= 0; --i) row.push_back(local.coefficient({i, k - i}));
  return row;
}

// Transposes per-monomial coefficient lists into condition rows.
Matrix transpose(const std::vector<Row>& columns) {
  if (columns.empty()) return {};
  Matrix rows(columns.front().size(), Row(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < columns[c].size(); ++r) rows[r][c] = columns[c][r];
  return rows;
}

}  // namespace

std::vector<Exponent> monomial_basis(const WeightedRing& ring, int d) {
  std::vector<Exponent> out;
  if (d < 0 || ring.size() == 0) return out;
  Exponent e(ring.size(), 0);
  enumerate(ring, 0, d, e, out);
  return out;
}

PointWPS::PointWPS(Rational x0, Rational x1, Rational y, int y_weight)
    : c_{std::move(x0), std::move(x1), std::move(y)}, w_(y_weight) {
  if (is_zero(c_[0]) && is_zero(c_[1]) && is_zero(c_[2]))
    throw std::invalid_argument("point with all coordinates zero");
  if (w_ < 1) throw std::invalid_argument("weight of y must be positive");
}

PointWPS PointWPS::parse(std::string_view text, int y_weight) {
  auto c = split_coords(text, 3, ':');
  return PointWPS(c[0], c[1], c[2], y_weight);
}

PointWPS PointWPS::normalized() const {
  if (!is_zero(c_[0])) return PointWPS(1, c_[1] / c_[0], c_[2] / pow(c_[0], w_), w_);
  if (!is_zero(c_[1])) return PointWPS(0, 1, c_[2] / pow(c_[1], w_), w_);
  return PointWPS(0, 0, 1, w_);
}

std::string PointWPS::to_string() const {
  return gorstab::to_string(c_[0]) + ":" + gorstab::to_string(c_[1]) + ":" + gorstab::to_string(c_[2]);
}

bool operator==(const PointWPS& a, const PointWPS& b) {
  if (a.w_ != b.w_) return false;
  PointWPS p = a.normalized(), q = b.normalized();
  return p.c_[0] == q.c_[0] && p.c_[1] == q.c_[1] && p.c_[2] == q.c_[2];
}

LocalChart chart_at(const PointWPS& p) {
  if (p.is_vertex()) {
    if (p.y_weight() == 1) return {2, 0, 0};
    throw std::domain_error("the vertex (0:0:1) has no smooth affine chart");
  }
  PointWPS n = p.normalized();
  if (!is_zero(n.x0())) return {0, n.x1(), n.y()};
  return {1, 0, n.y()};
}

WPoly localize(const WPoly& f, const PointWPS& p) {
  if (f.ring()->weights() != std::vector<int>{1, 1, p.y_weight()})
    throw RingMismatch("point of P(1,1," + std::to_string(p.y_weight()) + ") but ring " + f.ring()->to_string());
  LocalChart ch = chart_at(p);
  RingPtr loc = ring_local();
  WPoly x = WPoly::variable(loc, 0), y = WPoly::variable(loc, 1), one(loc, 1);
  std::vector<WPoly> images;
  if (ch.fixed == 0) images = {one, x + WPoly(loc, ch.a), y + WPoly(loc, ch.b)};
  else if (ch.fixed == 1) images = {x, one, y + WPoly(loc, ch.b)};
  else images = {x, y, one};
  return substitute(f, images);
}

Direction::Direction(Rational dy_, Rational dx_) : dy(std::move(dy_)), dx(std::move(dx_)) {
  if (!is_zero(dy)) {
    dx /= dy;
    dy = 1;
  } else if (!is_zero(dx)) {
    dx = 1;
  } else {
    throw std::invalid_argument("tangent direction (0:0)");
  }
}

Direction Direction::parse(std::string_view text) {
  auto c = split_coords(text, 2, ':');
  return Direction(c[0], c[1]);
}

Rational Direction::slope() const {
  if (is_zero(dx)) throw std::domain_error("tangent direction along the ruling has no slope");
  return dy / dx;
}

std::string Direction::to_string() const { return gorstab::to_string(dy) + ":" + gorstab::to_string(dx); }

Direction tangent_of(const WPoly& curve, const PointWPS& p) {
  WPoly g = localize(curve, p);
  if (!is_zero(g.constant_term())) throw std::invalid_argument("curve does not pass through the point");
  Rational a = g.coefficient({1, 0}), b = g.coefficient({0, 1});
  if (is_zero(a) && is_zero(b)) throw std::invalid_argument("curve is singular at the point");
  // a*dx + b*dy = 0
  return Direction(-a, b);
}

ConditionSpec ConditionSpec::mult(PointWPS p, int m) {
  return {std::move(p), ConditionKind::Multiplicity, m, {}, {}};
}

ConditionSpec ConditionSpec::quadruple(PointWPS p) {
  return {std::move(p), ConditionKind::Quadruple, 4, {}, {}};
}

ConditionSpec ConditionSpec::three_three(PointWPS p, Direction t) {
  return {std::move(p), ConditionKind::ThreeThree, 3, t, {}};
}

ConditionSpec ConditionSpec::tangent_to(PointWPS p, Direction t) {
  return {std::move(p), ConditionKind::Tangent, 1, t, {}};
}

ConditionSpec ConditionSpec::tangent_to_curve(PointWPS p, WPoly c) {
  return {std::move(p), ConditionKind::TangentToCurve, 1, {}, std::move(c)};
}

Matrix vanishing_conditions(const ConditionSpec& spec, const RingPtr& ring, int d) {
  require_p112(*ring);
  if (spec.point.is_vertex())
    throw std::domain_error("conditions at the vertex (0:0:1) are not supported");
  if (spec.kind == ConditionKind::Multiplicity && spec.multiplicity < 0)
    throw std::invalid_argument("negative multiplicity");

  std::optional<Direction> tangent = spec.tangent;
  if (spec.kind == ConditionKind::TangentToCurve) {
    if (!spec.curve) throw std::invalid_argument("tangency condition without a curve");
    tangent = tangent_of(spec.curve->rebased(ring), spec.point);
  }
  if ((spec.kind == ConditionKind::ThreeThree || spec.kind == ConditionKind::Tangent ||
       spec.kind == ConditionKind::TangentToCurve) &&
      !tangent)
    throw std::invalid_argument("condition requires a tangent direction");
  if (spec.kind == ConditionKind::ThreeThree && is_zero(tangent->dx))
    throw std::invalid_argument("the ruling through the point cannot be the tangent of a [3,3] point");

  RingPtr loc = ring_local();
  WPoly u = WPoly::variable(loc, 0), w = WPoly::variable(loc, 1);
  std::vector<Row> columns;
  for (const auto& e : monomial_basis(*ring, d)) {
    WPoly g = localize(WPoly::monomial(ring, e), spec.point);
    Row col;
    switch (spec.kind) {
      case ConditionKind::Multiplicity:
      case ConditionKind::Quadruple:
        col = low_order_coefficients(g, spec.kind == ConditionKind::Quadruple ? 4 : spec.multiplicity);
        break;
      case ConditionKind::ThreeThree: {
        col = low_order_coefficients(g, 3);
        // Total transform in the chart v = u(t0 + w); the strict transform is
        // this divided by u^3, which must again have order 3.
        WPoly blown = substitute(g, std::vector<WPoly>{u, u * (WPoly(loc, tangent->slope()) + w)});
        for (int k = 3; k < 6; ++k)
          for (int i = k; i >= 3; --i) col.push_back(blown.coefficient({i, k - i}));
        break;
      }
      case ConditionKind::Tangent:
      case ConditionKind::TangentToCurve:
        col.push_back(g.constant_term());
        col.push_back(g.coefficient({1, 0}) * tangent->dx + g.coefficient({0, 1}) * tangent->dy);
        break;
    }
    columns.push_back(std::move(col));
  }
  return transpose(columns);
}

namespace {

Matrix all_rows(const std::vector<ConditionSpec>& specs, const RingPtr& ring, int d) {
  for (std::size_t i = 0; i < specs.size(); ++i)
    for (std::size_t j = i + 1; j < specs.size(); ++j)
      if (specs[i].point == specs[j].point)
        throw std::invalid_argument("two conditions at the same point " + specs[i].point.to_string());
  Matrix rows;
  for (const auto& s : specs) {
    Matrix m = vanishing_conditions(s, ring, d);
    rows.insert(rows.end(), m.begin(), m.end());
  }
  return rows;
}

}  // namespace

SystemDimension linear_system_dim(const std::vector<ConditionSpec>& specs, const RingPtr& ring, int d) {
  SystemDimension out;
  out.basis_size = monomial_basis(*ring, d).size();
  out.rank = rank(all_rows(specs, ring, d));
  out.h0 = out.basis_size - out.rank;
  out.projective_dim = static_cast<long>(out.h0) - 1;
  return out;
}

std::vector<WPoly> system_basis(const std::vector<ConditionSpec>& specs, const RingPtr& ring, int d) {
  auto basis = monomial_basis(*ring, d);
  std::vector<WPoly> out;
  for (const auto& v : kernel_basis(all_rows(specs, ring, d), basis.size())) {
    WPoly p(ring);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v[i]);
    out.push_back(std::move(p));
  }
  return out;
}

WPoly general_member(const std::vector<ConditionSpec>& specs, const RingPtr& ring, int d, std::uint64_t seed) {
  auto basis = system_basis(specs, ring, d);
  if (basis.empty()) throw std::domain_error("the linear system is empty");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  while (true) {
    WPoly p(ring);
    for (const auto& b : basis) p += b * Rational(coeff(rng));
    if (!p.is_zero()) return p;
  }
}

}  // namespace gorstab
