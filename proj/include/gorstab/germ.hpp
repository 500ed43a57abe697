#pragma once

#include "gorstab/linsys.hpp"
#include "gorstab/wpoly.hpp"

#include <string>
#include <vector>

namespace gorstab {

/// Order of vanishing of a local polynomial at the origin.
int multiplicity(const WPoly& f);

/// Exceptional curve through the origin of a chart, either {x=0} (axis 0)
/// or {y=0} (axis 1). m holds the multiplicity of the total transform of
/// each tracked factor along the curve.
struct ExceptionalCurve {
  int axis = 0;
  int k = 0;
  std::vector<int> m;
  int total_m() const;
};

/// Local state of the blow-up engine: strict transforms of the tracked
/// factors in coordinates (x, y) of ring_local(), centred at the point
/// under study.
struct GermChart {
  std::vector<WPoly> factors;
  std::vector<ExceptionalCurve> through_origin;
  int depth = 0;

  explicit GermChart(std::vector<WPoly> fs);
  GermChart(std::vector<WPoly> fs, std::vector<ExceptionalCurve> ex, int d);
  WPoly product() const;
};

struct BlowUp {
  int center_multiplicity = 0;
  ExceptionalCurve created;
  /// Charts at the rational points where the strict transform meets the new curve.
  std::vector<GermChart> points;
  /// Irrational intersection points, all transversal.
  int irrational_points = 0;
};

/// Blows up the origin. Throws std::domain_error when the strict transform
/// meets the exceptional curve non-transversally at an irrational point.
BlowUp blow_up(const GermChart& g);

/// Simple normal crossings test for the total transform at the origin.
bool is_snc_at_origin(const GermChart& g);

struct BlowUpNode {
  int depth = 0;
  int multiplicity = 0;
  int k = 0;
  std::vector<int> m;
};

struct ResolutionLedger {
  std::vector<int> multiplicity_sequence;
  std::vector<BlowUpNode> nodes;  // pre-order
};

/// Blows up until the total transform is snc. The germ must be reduced at
/// the origin and pass through it.
ResolutionLedger resolution_tree(const WPoly& f);
ResolutionLedger resolution_tree(const std::vector<WPoly>& factors);

/// Log canonical threshold of a reduced germ through the origin.
Rational lct(const WPoly& f);
Rational lct(const ResolutionLedger& ledger);

/// Whether (A^2, sum c_i C_i) is log canonical at the origin.
bool is_log_canonical(const std::vector<WPoly>& factors, const std::vector<Rational>& coeffs);

enum class Verdict {
  Smooth,
  Negligible,
  EllipticDeg1,
  EllipticDeg2,
  EllipticDeg4,
  QuarterPoint,
  NotSlc,
  OtherLc
};

std::string to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

struct SingularityReport {
  Verdict verdict = Verdict::Smooth;
  std::vector<int> multiplicity_sequence;
  Rational lct = 1;
  /// Rational tangent directions (dy : dx) of the tangent cone.
  std::vector<Direction> tangents;
};

/// Germ must pass through the origin and be reduced there.
SingularityReport classify_branch_point(const WPoly& f);

/// Both germs nodal at the origin with four pairwise distinct tangents.
bool is_elliptic_deg4_pair(const WPoly& f1, const WPoly& f2);

/// Rational tangent directions of the tangent cone of f at the origin.
std::vector<Direction> tangent_directions(const WPoly& f);

/// Throws std::invalid_argument unless f vanishes at the origin and is reduced there.
void require_reduced_germ(const WPoly& f);

}  // namespace gorstab
