#pragma once

#include "gorstab/covers.hpp"
#include "gorstab/linsys.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gorstab::cli {

/// Input file problem; line and column are 1-based, 0 when unknown.
struct InputError : std::invalid_argument {
  InputError(const std::string& what, int line = 0, int column = 0);
  int line, column;
};

// Record-per-line text formats. Each record line is "label: body", an
// optional "| key=value ..." tail, '#' starts a comment, and a leading
// "ring: x0:1, x1:1, y:2" line declares the ring.

struct BranchFile {
  RingPtr ring;
  std::vector<BranchComponent> components;  // "component:" lines
  std::array<std::vector<BranchComponent>, 3> D;  // "D0:", "D1:", "D2:" lines
  std::vector<PointWPS> points;  // "point:" lines
  bool bidouble() const;
};

/// default_ring applies when the file has no ring line.
BranchFile parse_branch_file(const std::string& text, RingPtr default_ring);

struct ConditionFile {
  RingPtr ring;
  std::optional<int> degree;  // "degree: 10"
  std::vector<ConditionSpec> conditions;
};

/// "condition: three_three | point=1:0:0 tangent=0:1"; kinds are mult (m=),
/// quadruple, three_three (tangent=), tangent (tangent=) and tangent_curve
/// (curve= takes the rest of the line).
ConditionFile parse_condition_file(const std::string& text, RingPtr default_ring);

/// Full command line dispatch. Exit code 0 on success, 1 on a failed
/// verification, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gorstab::cli
