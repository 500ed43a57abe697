#pragma once

#include "gorstab/linsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gorstab {

/// Infinitesimal automorphisms of P(1,1,2):
///   (a x0 + b x1) d/dx0 + (c x0 + d x1) d/dx1 + (e y + q0 x0^2 + q1 x0 x1 + q2 x1^2) d/dy
/// in the parameter order a, b, c, d, e, q0, q1, q2. The Euler field
/// (a = d = 1, e = 2) acts trivially, leaving a 7-dimensional algebra.
constexpr int kAutParameters = 8;

enum class ConfigKind { Point, Direction, Section };

/// Item fixed by the automorphisms in a stabilizer computation.
struct ConfigItem {
  ConfigKind kind = ConfigKind::Point;
  std::optional<PointWPS> point;
  std::optional<Direction> direction;
  std::optional<WPoly> section;

  static ConfigItem at(PointWPS p);
  /// Fixes the point and the tangent direction there.
  static ConfigItem along(PointWPS p, Direction t);
  /// Preserves the curve {h = 0}.
  static ConfigItem curve(WPoly h);
};

/// Dimension of the subgroup of Aut P(1,1,2) fixing every item. Throws
/// std::domain_error when an item involves the vertex.
int stabilizer_dim(const std::vector<ConfigItem>& config);

struct StratumSpec {
  std::string name;
  int degree = 10;
  std::vector<ConditionSpec> conditions;
  std::vector<ConfigItem> pinned;
  long expected = 0;
};

struct StratumDimension {
  SystemDimension system;
  int stabilizer = 0;
  long dim = 0;
};

/// Projective dimension of the conditioned system minus the stabilizer.
/// Throws std::domain_error on an empty system.
StratumDimension stratum_dim(const StratumSpec& spec);

/// Normal strata of Gorenstein surfaces with K^2 = 1, chi = 3.
std::vector<StratumSpec> normal_strata();
/// Non-normal strata (families of the reduced part or of the doubled part).
std::vector<StratumSpec> nonnormal_strata();

struct TableRow {
  std::string table;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string detail;
};

/// One record per row of the normal and non-normal strata tables, and with
/// include_covers the bi-double examples as well.
std::vector<TableRow> verify_tables(bool include_covers = false);

/// Two [3,3] points at (1:0:0), (0:1:0) and a quadruple point at (1:1:0):
/// the system for a given tangent slope at (0:1:0).
struct PencilSample {
  Rational slope;
  long projective_dim = -1;
  bool reduced_member = false;
};

std::vector<PencilSample> n112_dichotomy(const std::vector<Rational>& slopes, int members_per_slope = 3,
                                         std::uint64_t seed = 1);

}  // namespace gorstab
