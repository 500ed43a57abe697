#include "support.hpp"

#include "gorstab/canring.hpp"
#include "gorstab/covers.hpp"
#include "gorstab/linsys.hpp"
#include "gorstab/parse.hpp"

#include <doctest.h>

using namespace gorstab;

namespace {
HypersurfaceModel n12() {
  return HypersurfaceModel(parse_polynomial("z^2+y^5+x1^4*(x0^6+y^3)+2*y^4*x0^2", ring_s1()));
}
CIModel ci() {
  return CIModel(parse_polynomial("z1^2+y1^3+x0^6+x0^2*y2^2", ring_s2()),
                 parse_polynomial("z2^2+y2^3+x0*z1*y1+x0^6", ring_s2()));
}
}  // namespace

TEST_CASE("plurigenera of the hypersurface model") {
  auto h = hilbert_hypersurface(n12(), 20);
  for (int m = 2; m <= 20; ++m) {
    CAPTURE(m);
    CHECK(h[m] == 3 + m * (m - 1) / 2);
    CHECK(h[m] == oracle::series_count({1, 1, 2, 5}, m) - oracle::series_count({1, 1, 2, 5}, m - 10));
  }
  CHECK(h[0] == 1);
  CHECK(h[1] == 2);
}

TEST_CASE("plurigenera of the complete intersection model") {
  auto h = hilbert_ci(ci(), 20);
  const std::vector<int> w{1, 2, 2, 3, 3};
  for (int m = 2; m <= 20; ++m) {
    CAPTURE(m);
    CHECK(h[m] == 2 + m * (m - 1) / 2);
    CHECK(h[m] == oracle::series_count(w, m) - 2 * oracle::series_count(w, m - 6) + oracle::series_count(w, m - 12));
  }
  for (int m = 0; m <= 14; ++m) CHECK(hilbert_ci_exact(ci(), m) == h[m]);
}

TEST_CASE("bicanonical sections") {
  std::vector<std::string> names;
  for (const auto& e : monomial_basis(*ring_s1(), 2)) names.push_back(to_string(WPoly::monomial(ring_s1(), e)));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"x0*x1", "x0^2", "x1^2", "y"});
}

TEST_CASE("ambient smoothness conditions") {
  CHECK(ambient_smoothness_check(n12()).ok);
  HypersurfaceModel no_y5(parse_polynomial("z^2+x0^10+x1^2*y^4", ring_s1()));
  CHECK_FALSE(ambient_smoothness_check(no_y5).ok);
  CHECK(ambient_smoothness_check(ci()).ok);
  CIModel common(parse_polynomial("z1^2+y1^3+x0^6", ring_s2()), parse_polynomial("z2^2+y1^2*y2+x0^6", ring_s2()));
  CHECK_FALSE(ambient_smoothness_check(common).ok);
  CHECK_THROWS_AS(HypersurfaceModel(parse_polynomial("z^2", ring_s1()) + parse_polynomial("x0", ring_s1())),
                  std::invalid_argument);
}

TEST_CASE("completing the square in z") {
  HypersurfaceModel m(parse_polynomial("z^2+x0^5*z+y^5+x1^10", ring_s1()));
  WPoly f = complete_square(m.f, 3);
  CHECK(f.coefficient_in(3, 1).is_zero());
  auto b = bicanonical_branch(m);
  REQUIRE(b.size() == 1);
  CHECK(b[0].poly == parse_polynomial("y^5+x1^10-1/4*x0^10", ring_p112()));
}

TEST_CASE("branch curve of the N_1,2 example") {
  auto b = bicanonical_branch(n12());
  CHECK(b[0].poly == parse_polynomial("y^5+x1^4*(x0^6+y^3)+2*y^4*x0^2", ring_p112()));
  CHECK(hypersurface_from_branch(b[0].poly).f == n12().f);
  CoverReport r = double_cover_report(b);
  CHECK(r.elliptic_degrees == std::vector<int>{1, 2});
}

TEST_CASE("canonical curve and base point") {
  CurveRestriction c = canonical_curve_restriction(n12());
  CHECK(c.valid);
  CHECK(c.y5_coefficient == 1);
  HypersurfaceModel bad(parse_polynomial("z^2+x1^2*y^4+x0^10", ring_s1()));
  CHECK_FALSE(canonical_curve_restriction(bad).valid);
  auto p = base_point_check(n12());
  CHECK(p == std::vector<Rational>{0, 0, -1, 1});
  for (int m = 0; m <= 20; ++m) CHECK(has_monomial_off_base_point(m) == (m != 1 && m != 3));
}
