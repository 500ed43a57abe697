#include "support.hpp"

#include "gorstab/canring.hpp"
#include "gorstab/linsys.hpp"
#include "gorstab/parse.hpp"

#include <doctest.h>

using namespace gorstab;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(make_rational(-6, 3)) == "-2");
  CHECK(to_string(make_rational(3, -9)) == "-1/3");
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("parse the canonical hypersurface terms") {
  WPoly f = parse_polynomial("z^2 + y^5 + 2*x0^2*y^4", ring_s1());
  CHECK(f.term_count() == 3);
  CHECK(weighted_degree(f) == 10);
  CHECK(f.coefficient({2, 0, 4, 0}) == 2);
}

TEST_CASE("implicit products, parentheses and integer quotients") {
  RingPtr r = ring_p112();
  CHECK(parse_polynomial("2x0 x1", r) == parse_polynomial("2*x0*x1", r));
  CHECK(parse_polynomial("(x0+x1)^2", r) == parse_polynomial("x0^2+2*x0*x1+x1^2", r));
  CHECK(parse_polynomial("3/6*y", r) == WPoly::variable(r, 2) * make_rational(1, 2));
  CHECK(parse_polynomial("-(y - x0^2)", r) == parse_polynomial("x0^2 - y", r));
}

TEST_CASE("parse errors carry a position") {
  RingPtr r = ring_p112();
  try {
    parse_polynomial("x0 + ", r);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_polynomial("x0 + w", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0^-1", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0/x1", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 / 2", r), ParseError);
}

TEST_CASE("print then parse is the identity") {
  gen::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    WPoly p = gen::polynomial(rng, ring_s1(), 1 + i % 9, 6);
    CHECK(parse_polynomial(to_string(p), ring_s1()) == p);
  }
}

TEST_CASE("weighted degree and homogeneity") {
  RingPtr r = ring_p112();
  CHECK(weighted_degree(parse_polynomial("y^2 + x0^3*x1", r)) == 4);
  CHECK_FALSE(weighted_degree(parse_polynomial("y + x0", r)).has_value());
  CHECK_THROWS_AS(weighted_degree(WPoly(r)), DegreeUndefined);
}

TEST_CASE("monomial bases against the generating series") {
  for (const auto& w : std::vector<std::vector<int>>{{1, 1, 2}, {1, 1, 1}, {1, 1, 2, 5}, {1, 2, 2, 3, 3}, {1, 1, 1, 2}}) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < w.size(); ++i) names.push_back("v" + std::to_string(i));
    RingPtr r = make_ring(names, w);
    for (int d = 0; d <= 14; ++d) CHECK(static_cast<long>(monomial_basis(*r, d).size()) == oracle::series_count(w, d));
  }
}

TEST_CASE("gcd recovers a planted common factor") {
  gen::Rng rng(5);
  RingPtr r = ring_p112();
  for (int i = 0; i < 25; ++i) {
    WPoly f = gen::form(rng, r, 2 + 2 * (i % 2));
    WPoly g = gen::form(rng, r, 2), h = gen::form(rng, r, 4);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    WPoly d = gcd(f * g, f * h);
    CHECK(exact_divide(d, f).has_value());
    CHECK(exact_divide(f * g, d).has_value());
    CHECK(exact_divide(f * h, d).has_value());
  }
}

TEST_CASE("squarefree part strips repeated factors") {
  RingPtr r = ring_p112();
  WPoly a = parse_polynomial("y + x0*x1", r), b = parse_polynomial("y - x0^2 + 3*x1^2", r);
  WPoly sq = squarefree_part(a * a * b);
  auto q = exact_divide(a * b, sq);
  REQUIRE(q.has_value());
  CHECK(q->is_constant());
  CHECK_FALSE(is_squarefree(a * a * b));
  CHECK(is_squarefree(a * b));
}

TEST_CASE("resultant of a linear and a quadratic form") {
  RingPtr r = make_ring({"x", "t"}, {1, 1});
  WPoly f = parse_polynomial("x - 3", r), g = parse_polynomial("x^2 + 1", r);
  // Res(x - a, g) = g(a)
  CHECK(resultant(f, g, 0) == WPoly(r, 10));
  CHECK(resultant(parse_polynomial("x - t", r), parse_polynomial("x + t", r), 0).is_zero() == false);
}

TEST_CASE("substitution and partial derivatives") {
  RingPtr r = ring_p112();
  WPoly f = parse_polynomial("x0^2*y + x1^4", r);
  CHECK(partial_derivative(f, "y") == parse_polynomial("x0^2", r));
  CHECK(partial_derivative(f, 1) == parse_polynomial("4*x1^3", r));
  WPoly g = substitute(f, std::map<std::string, WPoly>{{"y", parse_polynomial("x1^2", r)}});
  CHECK(g == parse_polynomial("x0^2*x1^2 + x1^4", r));
  CHECK_THROWS_AS(f + parse_polynomial("y0", ring_p2()), RingMismatch);
}
