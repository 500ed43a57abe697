#pragma once

#include "gorstab/covers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gorstab {

struct ExampleResult {
  std::string name;
  bool pass = false;
  /// Non-negligible singular points found.
  std::vector<CoverPoint> found;
  std::vector<std::string> mismatches;
  std::vector<std::string> warnings;
  std::optional<std::string> stratum;
};

std::vector<std::string> example_names();
std::string example_description(const std::string& name);

/// Runs the example and compares its singularities with the expected list.
/// Throws std::out_of_range for an unknown name.
ExampleResult verify_example(const std::string& name);

/// Bi-double constructions of the examples with K^2 = 1, chi = 2.
std::vector<std::pair<std::string, BiDoubleData>> bidouble_examples();

/// P(1,1,1,2) with coordinates x0, x1, x2, y: home of the double planes Y.
RingPtr ring_p1112();

/// Plane curve germ at a point of the double plane Y: y^2 = d1(x0, x1, x2),
/// for a curve b(x0, x1, x2, y) on Y, as a series truncated at the given order.
/// Both live in ring_p1112(). q = (x0, x1, x2, y) must lie on Y, with d1
/// smooth at (x0:x1:x2) when y = 0.
WPoly germ_on_double_plane(const WPoly& d1, const WPoly& b, const std::vector<Rational>& q, int order);

/// Whether the polynomial satisfies every condition of the system.
bool satisfies(const std::vector<ConditionSpec>& specs, const WPoly& f);

}  // namespace gorstab
