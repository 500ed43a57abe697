#pragma once

#include "gorstab/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gorstab {

struct RingMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeUndefined : std::domain_error {
  using std::domain_error::domain_error;
};

/// Polynomial ring over Q with a positive integer weight per variable.
class WeightedRing {
 public:
  WeightedRing(std::vector<std::string> names, std::vector<int> weights);

  /// Parses a declaration such as "x0:1, x1:1, y:2". A bare name gets weight 1.
  static WeightedRing parse(std::string_view decl);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  std::string to_string() const;

  friend bool operator==(const WeightedRing&, const WeightedRing&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const WeightedRing>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights);
RingPtr make_ring(std::string_view decl);

/// P(1,1,2) with coordinates x0, x1, y.
RingPtr ring_p112();
/// P^2 with coordinates y0, y1, y2.
RingPtr ring_p2();
/// Affine plane with local coordinates x, y.
RingPtr ring_local();

using Exponent = std::vector<int>;

/// Sparse polynomial over Q in a weighted ring. Terms are keyed by exponent
/// vector in lexicographic order; no zero coefficient is ever stored.
class WPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit WPoly(RingPtr ring);
  WPoly(RingPtr ring, const Rational& constant);

  static WPoly variable(RingPtr ring, std::size_t index);
  static WPoly variable(RingPtr ring, std::string_view name);
  static WPoly monomial(RingPtr ring, Exponent exponent, Rational coeff = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponent& e) const;

  /// Adds c * x^e in place.
  void add_term(const Exponent& e, const Rational& c);

  /// Lexicographically largest term.
  const std::pair<const Exponent, Rational>& leading_term() const;

  int degree_in(std::size_t var) const;
  int min_degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
  /// Coefficient of var^k, as a polynomial in the same ring not involving var.
  WPoly coefficient_in(std::size_t var, int k) const;

  /// Plain (unweighted) total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest plain total degree of a term (order of vanishing at the origin).
  int order() const;
  /// Homogeneous part of plain total degree k.
  WPoly homogeneous_part(int k) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  WPoly operator-() const;
  WPoly& operator+=(const WPoly& other);
  WPoly& operator-=(const WPoly& other);
  WPoly& operator*=(const WPoly& other);
  WPoly& operator*=(const Rational& c);

  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
  friend WPoly operator*(const WPoly& a, const WPoly& b);
  friend WPoly operator*(WPoly a, const Rational& c) { return a *= c; }
  friend WPoly operator*(const Rational& c, WPoly a) { return a *= c; }

  friend bool operator==(const WPoly& a, const WPoly& b);

  /// Same polynomial with leading coefficient scaled to 1.
  WPoly monic() const;
  /// Same polynomial over a different ring with identical variable layout size.
  WPoly rebased(RingPtr ring) const;

 private:
  void require_same_ring(const WPoly& other) const;

  RingPtr ring_;
  TermMap terms_;
};

WPoly pow(const WPoly& p, unsigned exponent);

/// Weighted degree when every term has the same weighted degree, nullopt
/// when p is inhomogeneous. Throws DegreeUndefined for p == 0.
std::optional<int> weighted_degree(const WPoly& p);
int weighted_degree_of(const WeightedRing& ring, const Exponent& e);
bool is_homogeneous(const WPoly& p);

/// Replaces variable i of p's ring by images[i]; all images share one ring.
WPoly substitute(const WPoly& p, const std::vector<WPoly>& images);
/// Replaces the named variables; variables not mentioned map to themselves
/// (which requires the target ring to be p's ring).
WPoly substitute(const WPoly& p, const std::map<std::string, WPoly>& assignment);

WPoly partial_derivative(const WPoly& p, std::size_t var);
WPoly partial_derivative(const WPoly& p, std::string_view var);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<WPoly> exact_divide(const WPoly& a, const WPoly& b);
/// Exact quotient; throws std::domain_error when the division is not exact.
WPoly divide_exact(const WPoly& a, const WPoly& b);

/// Greatest common divisor, normalised to leading coefficient 1.
WPoly gcd(const WPoly& a, const WPoly& b);
/// Content of p viewed as a polynomial in var (gcd of its coefficients).
WPoly content_in(const WPoly& p, std::size_t var);

/// p divided by gcd(p, all partial derivatives). Throws DegreeUndefined on 0.
WPoly squarefree_part(const WPoly& p);
bool is_squarefree(const WPoly& p);

/// Resultant with respect to var, computed as the Sylvester determinant.
WPoly resultant(const WPoly& a, const WPoly& b, std::size_t var);

/// Canonical text form, terms in graded-lex order (weighted degree first).
std::string to_string(const WPoly& p);

}  // namespace gorstab
