#include "gorstab/canring.hpp"

#include "gorstab/linsys.hpp"
#include "gorstab/matrix.hpp"

#include <map>
#include <stdexcept>

namespace gorstab {

namespace {

constexpr std::size_t X0 = 0, X1 = 1, Y = 2, Z = 3;
constexpr std::size_t CZ1 = 3, CZ2 = 4;

void require_form(const WPoly& f, const RingPtr& ring, int degree, const char* what) {
  if (!(*f.ring() == *ring)) throw RingMismatch(std::string(what) + " must live in " + ring->to_string());
  if (f.is_zero() || weighted_degree(f) != degree)
    throw std::invalid_argument(std::string(what) + " is not a form of degree " + std::to_string(degree));
}

Rational coeff_of(const WPoly& f, std::size_t var, int power) {
  Exponent e(f.ring()->size(), 0);
  e[var] = power;
  return f.coefficient(e);
}

WPoly set_zero(const WPoly& f, std::size_t var) {
  std::vector<WPoly> images;
  for (std::size_t i = 0; i < f.ring()->size(); ++i)
    images.push_back(i == var ? WPoly(f.ring()) : WPoly::variable(f.ring(), i));
  return substitute(f, images);
}

// Form on S1 not involving z, moved to P(1,1,2).
WPoly to_p112(const WPoly& f) {
  RingPtr q = ring_p112();
  return substitute(f, std::vector<WPoly>{WPoly::variable(q, 0), WPoly::variable(q, 1), WPoly::variable(q, 2),
                                          WPoly(q)});
}

}  // namespace

RingPtr ring_s1() {
  static const RingPtr r = make_ring({"x0", "x1", "y", "z"}, {1, 1, 2, 5});
  return r;
}

RingPtr ring_s2() {
  static const RingPtr r = make_ring({"x0", "y1", "y2", "z1", "z2"}, {1, 2, 2, 3, 3});
  return r;
}

HypersurfaceModel::HypersurfaceModel(WPoly f_) : f(std::move(f_)) { require_form(f, ring_s1(), 10, "f"); }

CIModel::CIModel(WPoly a, WPoly b) : f1(std::move(a)), f2(std::move(b)) {
  require_form(f1, ring_s2(), 6, "f1");
  require_form(f2, ring_s2(), 6, "f2");
}

long monomial_count(const WeightedRing& ring, int d) {
  if (d < 0) return 0;
  return static_cast<long>(monomial_basis(ring, d).size());
}

std::vector<long> hilbert_hypersurface(const HypersurfaceModel& model, int m_max) {
  const WeightedRing& r = *model.f.ring();
  std::vector<long> h;
  for (int m = 0; m <= m_max; ++m) h.push_back(monomial_count(r, m) - monomial_count(r, m - 10));
  return h;
}

std::vector<long> hilbert_ci(const CIModel& model, int m_max) {
  const WeightedRing& r = *model.f1.ring();
  std::vector<long> h;
  for (int m = 0; m <= m_max; ++m)
    h.push_back(monomial_count(r, m) - 2 * monomial_count(r, m - 6) + monomial_count(r, m - 12));
  return h;
}

long hilbert_ci_exact(const CIModel& model, int m) {
  const RingPtr& ring = model.f1.ring();
  std::vector<Exponent> target = monomial_basis(*ring, m);
  if (m < 6) return static_cast<long>(target.size());
  std::map<Exponent, std::size_t> column;
  for (std::size_t i = 0; i < target.size(); ++i) column[target[i]] = i;
  Matrix rows;
  for (const auto& e : monomial_basis(*ring, m - 6))
    for (const WPoly* f : {&model.f1, &model.f2}) {
      WPoly p = WPoly::monomial(ring, e) * *f;
      Row row(target.size());
      for (const auto& [ex, c] : p.terms()) row[column.at(ex)] = c;
      rows.push_back(std::move(row));
    }
  return static_cast<long>(target.size() - rank(rows));
}

AmbientCheck ambient_smoothness_check(const HypersurfaceModel& model) {
  AmbientCheck c;
  if (is_zero(coeff_of(model.f, Z, 2))) c.failures.push_back("no z^2 term: (0:0:0:1) lies on X");
  if (is_zero(coeff_of(model.f, Y, 5))) c.failures.push_back("no y^5 term: (0:0:1:0) lies on X");
  c.ok = c.failures.empty();
  return c;
}

AmbientCheck ambient_smoothness_check(const CIModel& model) {
  AmbientCheck c;
  if (is_zero(coeff_of(model.f1, CZ1, 2))) c.failures.push_back("f1 has no z1^2 term");
  if (is_zero(coeff_of(model.f2, CZ2, 2))) c.failures.push_back("f2 has no z2^2 term");
  if (!is_zero(coeff_of(model.f1, CZ2, 2)) || !is_zero(coeff_of(model.f2, CZ1, 2)))
    c.failures.push_back("cross squares z2^2 in f1 or z1^2 in f2");
  // b_i(0, y1, y2): the part of f_i on the line P(2,2).
  WPoly b1 = set_zero(set_zero(set_zero(model.f1, X0), CZ1), CZ2);
  WPoly b2 = set_zero(set_zero(set_zero(model.f2, X0), CZ1), CZ2);
  if (b1.is_zero() || b2.is_zero()) c.failures.push_back("b1(0,y1,y2) or b2(0,y1,y2) vanishes identically");
  else if (!gcd(b1, b2).is_constant()) c.failures.push_back("b1(0,y1,y2) and b2(0,y1,y2) have a common factor");
  c.ok = c.failures.empty();
  return c;
}

WPoly complete_square(const WPoly& f, std::size_t z) {
  if (f.degree_in(z) != 2) throw std::invalid_argument("expected a quadratic polynomial in the chosen variable");
  WPoly a = f.coefficient_in(z, 2), b = f.coefficient_in(z, 1);
  if (!a.is_constant()) throw std::invalid_argument("leading coefficient in the square variable is not constant");
  if (b.is_zero()) return f;
  std::vector<WPoly> images;
  for (std::size_t i = 0; i < f.ring()->size(); ++i) images.push_back(WPoly::variable(f.ring(), i));
  images[z] = images[z] - b * (Rational(1) / (2 * a.constant_term()));
  return substitute(f, images);
}

CurveRestriction canonical_curve_restriction(const HypersurfaceModel& model) {
  if (is_zero(coeff_of(model.f, Z, 2))) throw std::invalid_argument("no z^2 term");
  CurveRestriction r;
  WPoly rel = complete_square(set_zero(model.f, X0), Z);
  rel *= Rational(1) / coeff_of(rel, Z, 2);
  r.relation = rel;
  r.y5_coefficient = coeff_of(rel, Y, 5);
  WPoly rest = rel - WPoly::monomial(rel.ring(), {0, 0, 0, 2}) - WPoly::monomial(rel.ring(), {0, 0, 5, 0}, r.y5_coefficient);
  auto g = exact_divide(rest, WPoly::monomial(rel.ring(), {0, 2, 0, 0}));
  if (!g) throw std::logic_error("residual is not divisible by x1^2");
  r.g = *g;
  r.valid = !is_zero(r.y5_coefficient);
  if (!r.valid) r.reason = "h(x1, y) is divisible by x1^2: the point (0:1:0) is a singular point of the curve";
  return r;
}

std::vector<BranchComponent> bicanonical_branch(const HypersurfaceModel& model) {
  AmbientCheck amb = ambient_smoothness_check(model);
  if (!amb.ok) throw std::invalid_argument(amb.failures.front());
  WPoly f = complete_square(model.f, Z);
  f *= Rational(1) / coeff_of(f, Z, 2);
  if (f.degree_in(Z) != 2 || !f.coefficient_in(Z, 1).is_zero()) throw std::logic_error("square not completed");
  WPoly delta = to_p112(f.coefficient_in(Z, 0));
  return {{delta, 1}};
}

HypersurfaceModel hypersurface_from_branch(const WPoly& delta) {
  if (delta.ring()->weights() != std::vector<int>{1, 1, 2}) throw RingMismatch("branch equation lives on P(1,1,2)");
  RingPtr s = ring_s1();
  WPoly lifted = substitute(delta, std::vector<WPoly>{WPoly::variable(s, X0), WPoly::variable(s, X1),
                                                      WPoly::variable(s, Y)});
  return HypersurfaceModel(WPoly::monomial(s, {0, 0, 0, 2}) + lifted);
}

std::vector<Rational> base_point_check(const HypersurfaceModel& model) {
  AmbientCheck amb = ambient_smoothness_check(model);
  if (!amb.ok) throw std::invalid_argument(amb.failures.front());
  // On x0 = x1 = 0 only a z^2 + b y^5 survives; y = -ab, z = a^2 b^3 solves it.
  Rational a = coeff_of(model.f, Z, 2), b = coeff_of(model.f, Y, 5);
  Rational y = -a * b, z = a * a * b * b * b;
  if (!is_zero(model.f.evaluate({0, 0, y, z}))) throw std::logic_error("base point is not on X");
  return {0, 0, y, z};
}

bool has_monomial_off_base_point(int m) {
  // y^i z^j with 2i + 5j = m
  for (int j = 0; 5 * j <= m; ++j)
    if ((m - 5 * j) % 2 == 0) return true;
  return false;
}

}  // namespace gorstab
