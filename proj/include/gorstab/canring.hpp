#pragma once

#include "gorstab/hurwitz.hpp"
#include "gorstab/wpoly.hpp"

#include <string>
#include <vector>

namespace gorstab {

/// S1 = Q[x0, x1, y, z] with weights 1, 1, 2, 5.
RingPtr ring_s1();
/// S2 = Q[x0, y1, y2, z1, z2] with weights 1, 2, 2, 3, 3.
RingPtr ring_s2();

/// Degree 10 hypersurface in P(1,1,2,5). Throws RingMismatch or
/// std::invalid_argument when f is not a degree 10 form of S1.
struct HypersurfaceModel {
  WPoly f;
  explicit HypersurfaceModel(WPoly f);
};

/// Complete intersection of two sextics in P(1,2,2,3,3).
struct CIModel {
  WPoly f1, f2;
  CIModel(WPoly f1, WPoly f2);
};

/// Number of monomials of weighted degree d; 0 for d < 0.
long monomial_count(const WeightedRing& ring, int d);

/// h_0, ..., h_{m_max} of S1/(f), counted from degrees.
std::vector<long> hilbert_hypersurface(const HypersurfaceModel& model, int m_max);

/// h_0, ..., h_{m_max} of S2/(f1, f2) from the Koszul count.
std::vector<long> hilbert_ci(const CIModel& model, int m_max);

/// dim (S2/(f1, f2))_m computed as N_m minus the rank of the degree m part
/// of the ideal. Agrees with hilbert_ci exactly when the Koszul count holds
/// in degree m.
long hilbert_ci_exact(const CIModel& model, int m);

struct AmbientCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

AmbientCheck ambient_smoothness_check(const HypersurfaceModel& model);
AmbientCheck ambient_smoothness_check(const CIModel& model);

/// f with z replaced by z - b / (2a), where f = a z^2 + b z + c in the
/// variable z; a must be a nonzero constant.
WPoly complete_square(const WPoly& f, std::size_t z);

struct CurveRestriction {
  /// f(0, x1, y, z) after completing the square, scaled so z^2 has coefficient 1.
  WPoly relation{ring_s1()};
  Rational y5_coefficient = 0;
  /// relation = z^2 + y5_coefficient * y^5 + x1^2 * g
  WPoly g{ring_s1()};
  bool valid = false;
  std::string reason;
};

/// Throws std::invalid_argument when f has no z^2 term.
CurveRestriction canonical_curve_restriction(const HypersurfaceModel& model);

/// Branch divisor of the bicanonical double cover, as one component on P(1,1,2).
/// Throws std::invalid_argument when the ambient check fails.
std::vector<BranchComponent> bicanonical_branch(const HypersurfaceModel& model);

/// Inverse direction: z^2 + F for the branch equation F on P(1,1,2).
HypersurfaceModel hypersurface_from_branch(const WPoly& delta);

/// The base point of |K_X|: coordinates (0, 0, y, z) with y, z rational.
std::vector<Rational> base_point_check(const HypersurfaceModel& model);

/// Whether degree m has a monomial not vanishing at the base point, i.e.
/// one in y and z only.
bool has_monomial_off_base_point(int m);

}  // namespace gorstab
