#pragma once

#include "gorstab/matrix.hpp"
#include "gorstab/wpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gorstab {

/// All exponent vectors of weighted degree d, largest first in lex order.
std::vector<Exponent> monomial_basis(const WeightedRing& ring, int d);

/// Point (x0 : x1 : y) of P(1,1,w); w is 2 for the quadric cone and 1 for
/// the plane.
class PointWPS {
 public:
  PointWPS(Rational x0, Rational x1, Rational y, int y_weight = 2);
  /// Parses "a:b:c" with rational entries.
  static PointWPS parse(std::string_view text, int y_weight = 2);

  const Rational& x0() const { return c_[0]; }
  const Rational& x1() const { return c_[1]; }
  const Rational& y() const { return c_[2]; }
  std::vector<Rational> coords() const { return {c_[0], c_[1], c_[2]}; }

  int y_weight() const { return w_; }
  /// (0:0:1); singular only when w > 1.
  bool is_vertex() const { return is_zero(c_[0]) && is_zero(c_[1]); }
  /// Representative with the first nonzero of x0, x1 equal to 1 (or (0:0:1)).
  PointWPS normalized() const;
  std::string to_string() const;

  friend bool operator==(const PointWPS& a, const PointWPS& b);

 private:
  Rational c_[3];
  int w_;
};

/// Affine chart at a smooth point. Chart 0 is x0 = 1 with local coordinates
/// (x1 - a, y - b); chart 1 is x1 = 1 with local coordinates (x0, y - b);
/// chart 2 (plane only) is y = 1 with local coordinates (x0, x1).
struct LocalChart {
  std::size_t fixed;
  Rational a, b;
};

LocalChart chart_at(const PointWPS& p);

/// f written in the local coordinates (x, y) of ring_local() around p.
/// f must live in a ring with weights (1,1,w) matching the point.
WPoly localize(const WPoly& f, const PointWPS& p);

/// Tangent direction (dy : dx) in local chart coordinates, scaled so the
/// first nonzero entry is 1.
struct Direction {
  Rational dy, dx;

  Direction(Rational dy_, Rational dx_);
  static Direction parse(std::string_view text);
  /// Slope dy/dx; requires dx != 0.
  Rational slope() const;
  std::string to_string() const;
  friend bool operator==(const Direction&, const Direction&) = default;
};

/// Tangent direction at p of a curve smooth at p.
Direction tangent_of(const WPoly& curve, const PointWPS& p);

enum class ConditionKind {
  Multiplicity,  // order >= multiplicity at the point
  Quadruple,     // order >= 4
  ThreeThree,    // triple point with an infinitely near triple point along tangent
  Tangent,       // through the point with the given tangent direction
  TangentToCurve // through the point, tangent to a given curve there
};

struct ConditionSpec {
  PointWPS point;
  ConditionKind kind = ConditionKind::Multiplicity;
  int multiplicity = 1;
  std::optional<Direction> tangent;
  std::optional<WPoly> curve;

  static ConditionSpec mult(PointWPS p, int m);
  static ConditionSpec quadruple(PointWPS p);
  static ConditionSpec three_three(PointWPS p, Direction t);
  static ConditionSpec tangent_to(PointWPS p, Direction t);
  static ConditionSpec tangent_to_curve(PointWPS p, WPoly c);
};

/// Linear conditions on the coefficients of degree-d forms, one row per
/// condition, columns indexed by monomial_basis(ring, d).
Matrix vanishing_conditions(const ConditionSpec& spec, const RingPtr& ring, int d);

struct SystemDimension {
  std::size_t basis_size = 0;
  std::size_t rank = 0;
  std::size_t h0 = 0;
  long projective_dim = -1;
};

SystemDimension linear_system_dim(const std::vector<ConditionSpec>& specs, const RingPtr& ring, int d);

/// Basis of the conditioned system as polynomials.
std::vector<WPoly> system_basis(const std::vector<ConditionSpec>& specs, const RingPtr& ring, int d);

/// Member with small pseudo-random integer coordinates in the kernel basis,
/// deterministic in seed. Throws std::domain_error on an empty system.
WPoly general_member(const std::vector<ConditionSpec>& specs, const RingPtr& ring, int d, std::uint64_t seed);

}  // namespace gorstab
