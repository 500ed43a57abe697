#pragma once

#include "gorstab/hurwitz.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorstab {

/// Branch data that fails the log canonical test.
class NotLogCanonical : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoverPoint {
  std::string point;
  Verdict verdict = Verdict::Smooth;
  std::vector<int> multiplicity_sequence;
  Rational lct = 1;
};

struct CoverReport {
  Rational K2 = 1;
  int chi = 0;
  int cartier_index = 1;
  bool gorenstein = true;
  bool normal = true;
  std::vector<CoverPoint> singularities;
  /// Degrees of the elliptic singularities, sorted.
  std::vector<int> elliptic_degrees;
  std::optional<std::string> normalisation_type;  // "P", "dP", "E-"
  std::optional<std::string> stratum;
  std::optional<std::string> vertex;  // singularity over the vertex of the cone
  std::string minimal_resolution;
  std::string kodaira_dimension;
  int certified_nodes = 0;
  std::vector<std::string> warnings;
};

// Double covers of the quadric cone, branch divisor on P(1,1,2).

struct VertexBehavior {
  int order = 0;
  std::string label;  // "smooth", "quarter_point", "z2_quotient_elliptic"
};

/// Throws NotLogCanonical for order > 4 and std::logic_error for odd order.
VertexBehavior vertex_behavior(const std::vector<BranchComponent>& delta);

/// Throws NotLogCanonical when (Q, 1/2 Delta) is not log canonical.
CoverReport double_cover_report(const std::vector<BranchComponent>& delta,
                                const std::vector<PointWPS>& extra_points = {});

/// Type of the normalisation for non-reduced Delta = Delta0 + 2 Delta1.
std::string normalisation_type(const std::vector<BranchComponent>& delta);

// Bi-double covers of the plane, branch data on P^2 = P(1,1,1).

struct BiDoubleData {
  std::array<std::vector<BranchComponent>, 3> D;
  int degree(int i) const;
};

struct BiDoubleNumbers {
  std::array<int, 3> d{};
  std::array<int, 3> a{};
  int chi = 0;
  int two_k_degree = 0;  // 2K_X is the pullback of O(two_k_degree)
  Rational K2 = 0;
};

/// Throws std::invalid_argument on a parity violation or odd total degree.
BiDoubleNumbers bidouble_numbers(const std::array<int, 3>& d);

/// Whether D0, D1, D2 have a common point.
bool bidouble_common_point(const BiDoubleData& data);

CoverReport bidouble_report(const BiDoubleData& data);

BiDoubleData bidouble_normalise(const BiDoubleData& data);

// Cyclic Z/4 cover of the plane with branch data D1 (line), D2 (line), D3 (cubic).

struct Z4Report {
  std::array<int, 4> summand_degrees{};  // sorted
  int two_k_degree = 0;
  int cartier_index = 0;
  int quarter_points = 0;
  int a1_points = 0;
};

Z4Report z4_cover_invariants(const WPoly& d1, const WPoly& d2, const WPoly& d3);

/// Number of distinct and of simple roots of a binary form in P^1, counted over C.
struct RootProfile {
  int distinct = 0;
  int simple = 0;
};
RootProfile binary_root_profile(const WPoly& form);

/// Restriction of a plane form to a line, as a binary form in two of the coordinates.
WPoly restrict_to_line(const WPoly& form, const WPoly& line);

}  // namespace gorstab
