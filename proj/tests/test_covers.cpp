#include "support.hpp"

#include "gorstab/catalog.hpp"
#include "gorstab/covers.hpp"
#include "gorstab/parse.hpp"

#include <doctest.h>

using namespace gorstab;

namespace {
BranchComponent cone(const std::string& t, int m = 1) { return {parse_polynomial(t, ring_p112()), m}; }
BranchComponent plane(const std::string& t, int m = 1) { return {parse_polynomial(t, ring_p2()), m}; }
const char* kCubic = "y2^3+y0^3+2*y1^3+y0*y1*y2+3*y0^2*y2";
}  // namespace

TEST_CASE("double cover with a [3,3] point and a quadruple point") {
  CoverReport r = double_cover_report({cone("y+x1^2"), cone("y+2*x1^2"), cone("y-3*x1^2"),
                                       cone("y^2+x0^4+x1^4+x0^3*x1+3*x0*x1*y")});
  CHECK(r.chi == 3);
  CHECK(r.K2 == 1);
  CHECK(r.cartier_index == 1);
  CHECK(r.gorenstein);
  CHECK(r.normal);
  CHECK(r.elliptic_degrees == std::vector<int>{1});
  CHECK(r.stratum == "N_1");
  CHECK(r.kodaira_dimension == "1");
}

TEST_CASE("matching tangent sections separate the two N_1,1 strata") {
  CoverReport e = double_cover_report(
      {cone("y+x1^2"), cone("y+2*x1^2"), cone("y"), cone("y+x0^2"), cone("y+2*x0^2")});
  CHECK(e.stratum == "N_1,1^E");
  CHECK(verify_example("N11R-constructed").stratum == "N_1,1^R");
}

TEST_CASE("behaviour over the vertex") {
  CHECK(vertex_behavior({cone("y^5+x0^10+x1^10")}).label == "smooth");
  CHECK(vertex_behavior({cone("y^4*(x0^2+x1^2)+x0^10+x1^10")}).label == "quarter_point");
  CHECK(vertex_behavior({cone("y^3*(x0^4+x1^4)+x0^10+x1^10")}).label == "z2_quotient_elliptic");
  CHECK_THROWS_AS(vertex_behavior({cone("y^2*(x0^6+x1^6)+x0^10+x1^10")}), NotLogCanonical);

  CoverReport q = double_cover_report({cone("y^4*(x0^2-x1^2)+x0^10+x1^10")});
  CHECK(q.cartier_index == 2);
  CHECK_FALSE(q.gorenstein);
  bool quarter = false;
  for (const auto& s : q.singularities) quarter |= s.verdict == Verdict::QuarterPoint && s.point == "0:0:1";
  CHECK(quarter);
}

TEST_CASE("vertex order is even for every form through the vertex") {
  gen::Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    WPoly f = gen::form(rng, ring_p112(), 10);
    f -= WPoly::monomial(ring_p112(), {0, 0, 5}, f.coefficient({0, 0, 5}));
    if (f.is_zero()) continue;
    CHECK(vertex_order({{f, 1}}) % 2 == 0);
    CHECK(vertex_order({{f, 1}}) >= 2);
  }
}

TEST_CASE("non-reduced branch divisors") {
  CHECK(normalisation_type({cone("y", 2), cone("y^3+x0^6+x1^6+x0*x1*y^2")}) == "dP");
  CHECK(normalisation_type({cone("y^2+x0^4+x1^4", 2), cone("y-x0^2")}) == "P");
  CoverReport r = double_cover_report({cone("y", 2), cone("y^3+x0^6+x1^6+x0*x1*y^2")});
  CHECK_FALSE(r.normal);
  CHECK(r.normalisation_type == "dP");
  CHECK_THROWS(normalisation_type({cone("y", 3), cone("y^2+x0^4+x1^4")}));
}

TEST_CASE("a branch divisor that is not log canonical") {
  CHECK_THROWS_AS(double_cover_report({cone("y^5-x0^7*x1^3")}), NotLogCanonical);
}

TEST_CASE("bi-double numbers") {
  BiDoubleNumbers n = bidouble_numbers({1, 3, 3});
  CHECK(n.a == std::array<int, 3>{3, 2, 2});
  CHECK(n.chi == 2);
  CHECK(n.two_k_degree == 1);
  CHECK(n.K2 == 1);
  CHECK_THROWS_AS(bidouble_numbers({1, 2, 2}), std::invalid_argument);
}

TEST_CASE("the Gorenstein flag follows the common point of D0, D1, D2") {
  for (const auto& [name, data] : bidouble_examples()) {
    CAPTURE(name);
    CoverReport r = bidouble_report(data);
    CHECK(r.gorenstein == !bidouble_common_point(data));
    CHECK(r.gorenstein);
  }
  BiDoubleData q;
  q.D = {std::vector<BranchComponent>{plane("y0")}, {plane("y1"), plane("y0^2+y1^2+y2^2")},
         {plane("y1+y0"), plane("y0^2+2*y1^2+y2^2+y0*y2")}};
  CHECK(bidouble_common_point(q));
  CoverReport r = bidouble_report(q);
  CHECK_FALSE(r.gorenstein);
  CHECK(r.cartier_index == 2);
}

TEST_CASE("bi-double examples land in their named rows") {
  for (const auto& [name, data] : bidouble_examples()) {
    CAPTURE(name);
    CoverReport r = bidouble_report(data);
    CHECK(r.stratum == name);
    CHECK(r.chi == 2);
    CHECK(r.K2 == 1);
    CHECK(r.normal == (name.find('(') == std::string::npos));
  }
}

TEST_CASE("normalising bi-double data") {
  BiDoubleData d;
  d.D = {std::vector<BranchComponent>{plane("y0"), plane("y1", 2)}, {plane("y0"), plane("y2")}, {plane("y0"), plane(kCubic)}};
  BiDoubleData n = bidouble_normalise(d);
  int total = 0;
  for (const auto& D : n.D)
    for (const auto& c : D) {
      CHECK(c.multiplicity == 1);
      CHECK(c.poly != parse_polynomial("y0", ring_p2()));
      total += 1;
    }
  CHECK(total == 2);
}

TEST_CASE("cyclic Z/4 cover") {
  RingPtr r = ring_p2();
  Z4Report z = z4_cover_invariants(parse_polynomial("y0", r), parse_polynomial("y1", r), parse_polynomial(kCubic, r));
  CHECK(z.summand_degrees == std::array<int, 4>{0, 2, 2, 3});
  CHECK(z.two_k_degree == 1);
  CHECK(z.cartier_index == 2);
  CHECK(z.quarter_points == 3);
  CHECK(z.a1_points == 4);
}

TEST_CASE("binary forms and restriction to lines") {
  RingPtr r = ring_p2();
  WPoly c = restrict_to_line(parse_polynomial(kCubic, r), parse_polynomial("y0", r));
  RootProfile p = binary_root_profile(c);
  CHECK(p.distinct == 3);
  CHECK(p.simple == 3);
  RootProfile d = binary_root_profile(parse_polynomial("y1^2*y2", r));
  CHECK(d.distinct == 2);
  CHECK(d.simple == 1);
}
