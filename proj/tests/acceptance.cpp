// Prints one PASS/FAIL line per acceptance criterion. Exit status is 0 when
// every criterion passes or fails only where listed with --known-failure.

#include "cli.hpp"
#include "support.hpp"

#include "gorstab/canring.hpp"
#include "gorstab/catalog.hpp"
#include "gorstab/germ.hpp"
#include "gorstab/parse.hpp"
#include "gorstab/strata.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace gorstab;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::string cli_out(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream o, e;
  int c = cli::run(args, o, e);
  if (code) *code = c;
  return o.str() + e.str();
}

std::multiset<std::string> verdicts(const ExampleResult& r) {
  std::multiset<std::string> s;
  for (const auto& p : r.found) s.insert(to_string(p.verdict));
  return s;
}

Check c1() {
  Check c;
  c.require(cli_out({"dim", "--ring", "x0:1,x1:1,y:2", "--degree", "10"}).find("h0=36 ") != std::string::npos,
            "dim on P(1,1,2) is not 36");
  const long oracle = oracle::series_count({1, 1, 2, 5}, 10);
  c.require(oracle == 49, "series oracle for P(1,1,2,5) is not 49");
  c.require(cli_out({"dim", "--ring", "x0:1,x1:1,y:2,z:5", "--degree", "10"}).find("h0=" + std::to_string(oracle) + " ") !=
                std::string::npos,
            "dim on P(1,1,2,5) differs from the oracle");
  return c;
}

Check c2() {
  Check c;
  const PointWPS P(1, 0, 0), Q(0, 1, 0);
  RingPtr r = ring_p112();
  WPoly h = parse_polynomial("x0*x1+y", r);
  auto quad = linear_system_dim({ConditionSpec::quadruple(P)}, r, 10).rank;
  auto tt = linear_system_dim({ConditionSpec::three_three(P, Direction(0, 1))}, r, 10).rank;
  auto match = linear_system_dim({ConditionSpec::three_three(P, tangent_of(h, P)), ConditionSpec::three_three(Q, tangent_of(h, Q))},
                                 r, 10)
                   .rank;
  c.require(quad == 10, "quadruple point rank " + std::to_string(quad));
  c.require(tt == 12, "[3,3] rank " + std::to_string(tt));
  c.require(match == 23, "matching pair rank " + std::to_string(match));
  return c;
}

Check c3() {
  Check c;
  int code = 0;
  std::string out = cli_out({"verify-tables", "--format", "structured"}, &code);
  c.require(code == 0, "verify-tables exit code " + std::to_string(code));
  c.require(std::count(out.begin(), out.end(), '\n') == 12, "verify-tables did not emit 12 rows");
  const std::map<std::string, int> stab{{"N_empty", 7}, {"N_2", 5}, {"N_1", 4}, {"N_1,2", 2}, {"N_1,1^R", 1},
                                        {"N_1,1,2", 0}, {"N_1,1,1", 0}, {"dP", 4}, {"P", 4}, {"E", 1}};
  std::vector<StratumSpec> all = normal_strata();
  for (auto& s : nonnormal_strata()) all.push_back(s);
  for (const auto& s : all) {
    StratumDimension d = stratum_dim(s);
    c.require(d.dim == s.expected, s.name + " dimension " + std::to_string(d.dim));
    if (auto it = stab.find(s.name); it != stab.end())
      c.require(d.stabilizer == it->second, s.name + " stabilizer " + std::to_string(d.stabilizer));
  }
  return c;
}

Check c4() {
  Check c;
  const std::vector<std::pair<std::string, std::multiset<std::string>>> want{
      {"N12", {"elliptic_deg1", "elliptic_deg2"}},
      {"N11R", {"elliptic_deg1", "elliptic_deg1"}},
      {"N112", {"elliptic_deg1", "elliptic_deg1", "elliptic_deg2"}},
      {"N111-general", {"elliptic_deg1", "elliptic_deg1", "elliptic_deg1"}},
      {"N2-lines", {"elliptic_deg2"}},
      {"N1-lines", {"elliptic_deg1"}},
      {"N22-lines", {"elliptic_deg2", "elliptic_deg2"}},
      {"N11E-lines", {"elliptic_deg1", "elliptic_deg1"}},
  };
  for (const auto& [name, v] : want) {
    ExampleResult r = verify_example(name);
    std::string got;
    for (const auto& s : verdicts(r)) got += s + " ";
    c.require(r.pass && verdicts(r) == v, name + " found {" + got + "}" +
                                              (r.mismatches.empty() ? "" : ": " + r.mismatches.front()));
  }
  return c;
}

Check c5() {
  Check c;
  HypersurfaceModel hm(parse_polynomial("z^2+y^5+x1^4*(x0^6+y^3)+2*y^4*x0^2", ring_s1()));
  CIModel ci(parse_polynomial("z1^2+y1^3+x0^6+x0^2*y2^2", ring_s2()), parse_polynomial("z2^2+y2^3+x0*z1*y1+x0^6", ring_s2()));
  auto h = hilbert_hypersurface(hm, 20);
  auto g = hilbert_ci(ci, 20);
  for (int m = 2; m <= 20; ++m) {
    c.require(h[m] == 3 + m * (m - 1) / 2, "hypersurface m=" + std::to_string(m));
    c.require(g[m] == 2 + m * (m - 1) / 2, "complete intersection m=" + std::to_string(m));
  }
  for (int m = 2; m <= 12; ++m) c.require(hilbert_ci_exact(ci, m) == g[m], "exact CI rank m=" + std::to_string(m));
  std::set<std::string> basis;
  for (const auto& e : monomial_basis(*ring_s1(), 2)) basis.insert(to_string(WPoly::monomial(ring_s1(), e)));
  c.require(basis == std::set<std::string>{"x0^2", "x0*x1", "x1^2", "y"}, "bicanonical basis");
  return c;
}

Check c6() {
  Check c;
  BiDoubleNumbers n = bidouble_numbers({1, 3, 3});
  c.require(n.a == std::array<int, 3>{3, 2, 2}, "a_i for (1,3,3)");
  c.require(n.chi == 2, "chi for (1,3,3)");
  c.require(n.two_k_degree == 1, "2K degree for (1,3,3)");
  std::vector<BiDoubleData> flips;
  for (const auto& [name, data] : bidouble_examples()) flips.push_back(data);
  BiDoubleData q;
  auto plane = [](const char* t) { return BranchComponent{parse_polynomial(t, ring_p2()), 1}; };
  q.D = {std::vector<BranchComponent>{plane("y0")}, {plane("y1"), plane("y0^2+y1^2+y2^2")},
         {plane("y1+y0"), plane("y0^2+2*y1^2+y2^2+y0*y2")}};
  flips.push_back(q);
  for (const auto& d : flips) {
    CoverReport r = bidouble_report(d);
    c.require(r.gorenstein != bidouble_common_point(d), "Gorenstein flag disagrees with the common point");
  }
  c.require(!bidouble_report(q).gorenstein, "common point example should not be Gorenstein");
  for (const auto& r : verify_tables(true))
    if (r.table == "covers" && r.name.rfind("Z_2", 0) != 0) c.require(r.pass, r.name + ": " + r.computed);
  return c;
}

Check c7() {
  Check c;
  for (const auto& g : oracle::germ_corpus()) {
    WPoly f = parse_polynomial(g.text, ring_local());
    Rational o = oracle::newton_lct(f);
    Rational l = lct(resolution_tree(f));
    c.require(o == g.lct, g.name + " oracle " + to_string(o));
    c.require(l == o, g.name + " ledger " + to_string(l));
  }
  return c;
}

Check c8() {
  Check c;
  auto cone = [](const char* t) { return std::vector<BranchComponent>{{parse_polynomial(t, ring_p112()), 1}}; };
  const std::vector<std::pair<const char*, std::string>> cases{
      {"y^5+x0^10+x1^10", "smooth"},
      {"y^4*(x0^2+x1^2)+x0^10+x1^10", "quarter_point"},
      {"y^3*(x0^4+x1^4)+x0^10+x1^10", "z2_quotient_elliptic"}};
  int order = 0;
  for (const auto& [t, label] : cases) {
    VertexBehavior v = vertex_behavior(cone(t));
    c.require(v.order == order && v.label == label, std::string(t) + " -> " + v.label);
    order += 2;
  }
  gen::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    WPoly f = gen::form(rng, ring_p112(), 10);
    f -= WPoly::monomial(ring_p112(), {0, 0, 5}, f.coefficient({0, 0, 5}));
    if (f.is_zero()) continue;
    int o = vertex_order({{f, 1}});
    c.require(o % 2 == 0 && o >= 2, "vertex order " + std::to_string(o));
  }
  return c;
}

Check c9() {
  Check c;
  gen::Rng rng(9);
  // local verdicts under coordinate changes
  const auto& corpus = oracle::germ_corpus();
  for (int i = 0; i < 50; ++i) {
    const auto& g = corpus[i % corpus.size()];
    WPoly f = parse_polynomial(g.text, ring_local());
    auto a = classify_branch_point(f), b = classify_branch_point(gen::local_automorphism(rng, f));
    c.require(a.verdict == b.verdict && a.lct == b.lct, g.name + " changed under a coordinate change");
  }
  // global verdict multisets under automorphisms of the cone
  RingPtr r = ring_p112();
  std::vector<BranchComponent> delta{{parse_polynomial("y+x1^2", r), 1},
                                     {parse_polynomial("y+2*x1^2", r), 1},
                                     {parse_polynomial("y-3*x1^2", r), 1},
                                     {parse_polynomial("y^2+x0^4+x1^4+x0^3*x1+3*x0*x1*y", r), 1}};
  auto summary = [](const CoverReport& rep) {
    std::multiset<std::string> s;
    for (const auto& p : rep.singularities)
      if (p.verdict != Verdict::Negligible) s.insert(to_string(p.verdict));
    return std::make_pair(s, rep.elliptic_degrees);
  };
  const auto base = summary(double_cover_report(delta));
  for (int i = 0; i < 50; ++i) {
    gen::ConeAutomorphism g = gen::cone_automorphism(rng);
    std::vector<BranchComponent> moved;
    for (const auto& comp : delta) moved.push_back({g.apply(comp.poly), comp.multiplicity});
    c.require(summary(double_cover_report(moved)) == base, "verdicts changed under a cone automorphism");
  }
  // parse and print
  for (int i = 0; i < 500; ++i) {
    WPoly p = gen::polynomial(rng, ring_s1(), 1 + i % 9, 6);
    c.require(parse_polynomial(to_string(p), ring_s1()) == p, "round trip of " + to_string(p));
  }
  // rank under row permutations
  Matrix m;
  for (const auto& spec : {ConditionSpec::three_three(PointWPS(1, 0, 0), Direction(0, 1)), ConditionSpec::quadruple(PointWPS(0, 1, 0))})
    for (auto& row : vanishing_conditions(spec, r, 10)) m.push_back(row);
  const std::size_t r0 = rank(m);
  for (int i = 0; i < 50; ++i) {
    std::shuffle(m.begin(), m.end(), rng);
    c.require(rank(m) == r0, "rank changed under a row permutation");
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--known-failure") known.insert(std::stoi(argv[++i]));

  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"dimension of degree-10 forms", c1},
      {"ranks of point conditions", c2},
      {"strata tables", c3},
      {"explicit examples", c4},
      {"plurigenera", c5},
      {"bi-double covers", c6},
      {"lct oracle", c7},
      {"vertex behaviour", c8},
      {"property suites", c9},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << id << " " << (c.ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!c.ok) {
      std::cout << " (";
      for (std::size_t k = 0; k < c.notes.size(); ++k) std::cout << (k ? "; " : "") << c.notes[k];
      std::cout << ")";
      if (known.count(id)) std::cout << " [known]";
      else ++unexpected;
    }
    std::cout << "\n";
  }
  return unexpected == 0 ? 0 : 1;
}
