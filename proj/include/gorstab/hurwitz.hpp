#pragma once

#include "gorstab/germ.hpp"
#include "gorstab/linsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gorstab {

/// Reduced, irreducible (as asserted by the caller) curve with its
/// multiplicity in a branch divisor.
struct BranchComponent {
  WPoly poly;
  int multiplicity = 1;
};

struct LocateResult {
  /// Rational candidate points; each is on at least one component and may
  /// still turn out to be a smooth point of the support.
  std::vector<PointWPS> points;
  /// Intersections with irrational coordinates certified to be transversal
  /// crossings of two smooth branches.
  int certified_nodes = 0;
  std::vector<std::string> warnings;
};

/// Singular points of the union of the given reduced curves in P(1,1,w),
/// away from the vertex when w > 1.
LocateResult locate_singular_points(const std::vector<WPoly>& components);

/// Order in (x0, x1) of F(x0, x1, 1), the local behaviour of the curve at
/// the vertex of P(1,1,2).
int vertex_order(const std::vector<BranchComponent>& components);

struct PointReport {
  PointWPS point;
  SingularityReport report;
  std::vector<std::size_t> components;  // indices of components through the point
  bool log_canonical = true;
};

struct HurwitzReport {
  bool log_canonical = true;
  bool reduced = true;
  int total_degree = 0;
  int vertex_order = 0;
  std::vector<PointReport> points;  // singular points of the support
  int certified_nodes = 0;
  std::vector<std::string> warnings;
  std::string failure;
};

/// Log canonicity of (P, 1/2 sum m_i C_i) on P(1,1,w) with all singular
/// points of the support located and classified. Extra points are checked
/// in addition to the located ones.
HurwitzReport check_hurwitz_slc(const std::vector<BranchComponent>& components,
                                const std::vector<PointWPS>& extra_points = {},
                                std::optional<int> expected_degree = 10);

}  // namespace gorstab
