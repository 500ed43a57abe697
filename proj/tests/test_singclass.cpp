#include "support.hpp"

#include "gorstab/germ.hpp"
#include "gorstab/hurwitz.hpp"
#include "gorstab/parse.hpp"

#include <doctest.h>

using namespace gorstab;

namespace {
WPoly germ(const std::string& t) { return parse_polynomial(t, ring_local()); }
}  // namespace

TEST_CASE("lct from the resolution ledger matches the Newton polygon and hand values") {
  for (const auto& g : oracle::germ_corpus()) {
    CAPTURE(g.name);
    WPoly f = germ(g.text);
    CHECK(oracle::newton_lct(f) == g.lct);
    CHECK(lct(f) == g.lct);
    CHECK(lct(resolution_tree(f)) == g.lct);
  }
}

TEST_CASE("verdicts on the germ corpus") {
  CHECK(classify_branch_point(germ("x*y")).verdict == Verdict::Negligible);
  CHECK(classify_branch_point(germ("y^2-x^3")).verdict == Verdict::Negligible);
  CHECK(classify_branch_point(germ("y^2-x^4")).verdict == Verdict::Negligible);
  CHECK(classify_branch_point(germ("x*y*(x+y)")).verdict == Verdict::Negligible);
  auto q = classify_branch_point(germ("x*y*(x-y)*(x+y)"));
  CHECK(q.verdict == Verdict::EllipticDeg2);
  CHECK(q.multiplicity_sequence == std::vector<int>{4});
  auto t = classify_branch_point(germ("y^3-x^6"));
  CHECK(t.verdict == Verdict::EllipticDeg1);
  CHECK(t.multiplicity_sequence == std::vector<int>{3, 3});
  CHECK(classify_branch_point(germ("x+y^2")).verdict == Verdict::Smooth);
}

TEST_CASE("germs beyond the slc range") {
  for (const char* t : {"y^3-x^7", "x^5+y^5", "y^2*x+x^6"}) {
    CAPTURE(t);
    WPoly f = germ(t);
    auto r = classify_branch_point(f);
    CHECK(r.lct == oracle::newton_lct(f));
    CHECK((r.lct < make_rational(1, 2)) == (r.verdict == Verdict::NotSlc));
  }
  CHECK(classify_branch_point(germ("y^3-x^7")).verdict == Verdict::NotSlc);
}

TEST_CASE("non-reduced germs are rejected") {
  CHECK_THROWS_AS(classify_branch_point(germ("y^2")), std::invalid_argument);
  CHECK_THROWS_AS(classify_branch_point(germ("1+x")), std::invalid_argument);
}

TEST_CASE("classification is invariant under local coordinate changes") {
  gen::Rng rng(2024);
  const auto& corpus = oracle::germ_corpus();
  for (int i = 0; i < 50; ++i) {
    const auto& g = corpus[i % corpus.size()];
    CAPTURE(g.name);
    WPoly f = germ(g.text);
    auto before = classify_branch_point(f);
    auto after = classify_branch_point(gen::local_automorphism(rng, f));
    CHECK(after.verdict == before.verdict);
    CHECK(after.lct == before.lct);
    CHECK(after.multiplicity_sequence == before.multiplicity_sequence);
  }
}

TEST_CASE("elliptic degree 4 pairs") {
  CHECK(is_elliptic_deg4_pair(germ("x*y"), germ("(x-y)*(x+y)")));
  CHECK_FALSE(is_elliptic_deg4_pair(germ("x*y"), germ("x*(x+y)")));
}

TEST_CASE("Hurwitz check on the quadric cone") {
  RingPtr r = ring_p112();
  HurwitzReport triple = check_hurwitz_slc({{parse_polynomial("y+x0^2", r), 3}, {parse_polynomial("y^2+x1^4", r), 1}});
  CHECK_FALSE(triple.log_canonical);
  HurwitzReport lines = check_hurwitz_slc({{parse_polynomial("y+x1^2", r), 1},
                                           {parse_polynomial("y+2*x1^2", r), 1},
                                           {parse_polynomial("y-3*x1^2", r), 1},
                                           {parse_polynomial("y^2+x0^4+x1^4+x0^3*x1+3*x0*x1*y", r), 1}});
  CHECK(lines.log_canonical);
  CHECK(lines.total_degree == 10);
  CHECK(lines.vertex_order == 0);
  CHECK_THROWS(check_hurwitz_slc({{parse_polynomial("y", r), 1}}));
}
