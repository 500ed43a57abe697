#pragma once

#include "gorstab/wpoly.hpp"

#include <utility>
#include <vector>

namespace gorstab {

/// Dense univariate polynomial over Q; coeffs[k] multiplies t^k.
struct UPoly {
  std::vector<Rational> coeffs;

  UPoly() = default;
  explicit UPoly(std::vector<Rational> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const Rational& lead() const { return coeffs.back(); }
  Rational operator()(const Rational& t) const;

  friend bool operator==(const UPoly&, const UPoly&) = default;
};

UPoly derivative(const UPoly& p);
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& p);

/// p must not involve any variable other than var.
UPoly to_upoly(const WPoly& p, std::size_t var);
WPoly to_wpoly(const UPoly& p, const RingPtr& ring, std::size_t var);

struct RationalRoot {
  Rational value;
  int multiplicity;
};

/// Roots of p split into the rational ones (with multiplicity) and the
/// remaining cofactor, which has no rational root.
struct RootSplit {
  std::vector<RationalRoot> rational;
  UPoly rest;
  /// True when `rest` has no repeated factor.
  bool rest_squarefree = true;
};

/// Exact rational roots by Sturm isolation of the real roots followed by an
/// exact test of the unique candidate k/lead admitted by each isolating interval.
RootSplit split_rational_roots(const UPoly& p);

std::vector<Rational> rational_roots(const UPoly& p);

}  // namespace gorstab
