#include "gorstab/catalog.hpp"

#include "gorstab/canring.hpp"
#include "gorstab/parse.hpp"
#include "gorstab/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace gorstab {

namespace {

struct Expected {
  std::optional<PointWPS> point;
  Verdict verdict;
};

struct Entry {
  std::string name;
  std::string description;
  std::function<ExampleResult()> run;
};

const PointWPS kP(1, 0, 0), kQ(0, 1, 0), kR(1, 1, 0);

std::string key(const PointWPS& p) { return p.normalized().to_string(); }

std::vector<BranchComponent> on_cone(std::initializer_list<std::pair<const char*, int>> cs) {
  std::vector<BranchComponent> out;
  for (const auto& [text, m] : cs) out.push_back({parse_polynomial(text, ring_p112()), m});
  return out;
}

std::vector<BranchComponent> in_plane(std::initializer_list<std::pair<const char*, int>> cs) {
  std::vector<BranchComponent> out;
  for (const auto& [text, m] : cs) out.push_back({parse_polynomial(text, ring_p2()), m});
  return out;
}

// Matches found non-negligible points against the expectation; unplaced
// expectations match any remaining point with the same verdict.
void compare(ExampleResult& r, const std::vector<Expected>& expected) {
  std::vector<bool> used(r.found.size(), false);
  std::vector<const Expected*> loose;
  for (const auto& e : expected) {
    if (!e.point) {
      loose.push_back(&e);
      continue;
    }
    bool hit = false;
    for (std::size_t i = 0; i < r.found.size() && !hit; ++i)
      if (!used[i] && r.found[i].point == key(*e.point) && r.found[i].verdict == e.verdict) hit = used[i] = true;
    if (!hit) r.mismatches.push_back("expected " + to_string(e.verdict) + " at " + key(*e.point));
  }
  for (const Expected* e : loose) {
    bool hit = false;
    for (std::size_t i = 0; i < r.found.size() && !hit; ++i)
      if (!used[i] && r.found[i].verdict == e->verdict) hit = used[i] = true;
    if (!hit) r.mismatches.push_back("expected " + to_string(e->verdict) + " somewhere");
  }
  for (std::size_t i = 0; i < r.found.size(); ++i)
    if (!used[i]) r.mismatches.push_back("unexpected " + to_string(r.found[i].verdict) + " at " + r.found[i].point);
  for (const auto& w : r.warnings)
    if (w.rfind("unlocated", 0) == 0) r.mismatches.push_back("not certified: " + w);
}

void keep_non_negligible(ExampleResult& r, const CoverReport& rep) {
  for (const auto& s : rep.singularities)
    if (s.verdict != Verdict::Negligible) r.found.push_back(s);
  r.warnings = rep.warnings;
  r.stratum = rep.stratum;
}

void expect_stratum(ExampleResult& r, const std::string& want) {
  if (r.stratum != want) r.mismatches.push_back("expected stratum " + want + ", got " + r.stratum.value_or("none"));
}

ExampleResult double_cover_case(const std::string& name, const std::vector<BranchComponent>& delta,
                                const std::vector<Expected>& expected, std::optional<std::string> stratum) {
  ExampleResult r;
  r.name = name;
  try {
    CoverReport rep = double_cover_report(delta);
    keep_non_negligible(r, rep);
    compare(r, expected);
    if (stratum) expect_stratum(r, *stratum);
  } catch (const NotLogCanonical& e) {
    r.mismatches.push_back(std::string("branch divisor is not log canonical: ") + e.what());
    HurwitzReport h = check_hurwitz_slc(delta);
    for (const auto& p : h.points)
      if (p.report.verdict != Verdict::Negligible)
        r.found.push_back({key(p.point), p.report.verdict, p.report.multiplicity_sequence, p.report.lct});
  }
  r.pass = r.mismatches.empty();
  return r;
}

WPoly n12_branch() {
  HypersurfaceModel m(parse_polynomial("z^2+y^5+x1^4*(x0^6+y^3)+2*y^4*x0^2", ring_s1()));
  return bicanonical_branch(m).front().poly;
}

// General member with [3,3] points at P (tangent y = 0) and Q (slope 1).
WPoly n11r_constructed() {
  const std::vector<ConditionSpec> specs{ConditionSpec::three_three(kP, Direction(0, 1)),
                                         ConditionSpec::three_three(kQ, Direction(1, 1))};
  return general_member(specs, ring_p112(), 10, 3);
}

const char* kN11RPrinted =
    "y^5+(5*x0^2+2*x0*x1)*y^4+(19*x0^3*x1+x0^2*x1^2-x0*x1^3)*y^3+(4*x0^4*x1^2-3*x0^2*x1^4)*y^2"
    "-3*x0^3*x1^5*y-x0^4*x1^6";

const char* kN112F = "x0^3*x1*y^2-2*x0^2*x1^2*y^2+x0*x1^3*y^2+x0^2*y^3-2*x0*x1*y^3+x1^2*y^3";
const char* kN112G =
    "x0^6*x1^2-4*x0^5*x1^3+6*x0^4*x1^4-4*x0^3*x1^5+x0^2*x1^6+2*x0^5*x1*y-8*x0^4*x1^2*y+12*x0^3*x1^3*y"
    "-8*x0^2*x1^4*y+2*x0*x1^5*y+x0^4*y^2-2*x0^2*x1^2*y^2+x1^4*y^2+4*x0^2*y^3-8*x0*x1*y^3+4*x1^2*y^3";

const char* kN111F = "(x0^2*x1-x0*x1^2+2*x0*y-x1*y)^2";
const char* kN111G =
    "x0^5*x1+x0^4*x1^2-5*x0^3*x1^3+3*x0^2*x1^4+x0^4*y+12*x0^3*x1*y-19*x0^2*x1^2*y+6*x0*x1^3*y"
    "+14*x0^2*y^2-13*x0*x1*y^2+3*x1^2*y^2+y^3";
const char* kN111H1 = "x0*x1+y";
const char* kN111H2 = "x0*x1-x1^2+y";

ExampleResult n111_member(const std::string& name, const char* cubic) {
  ExampleResult r;
  r.name = name;
  RingPtr q = ring_p112();
  WPoly delta = parse_polynomial(kN111H1, q) * parse_polynomial(kN111H2, q) * parse_polynomial(cubic, q);
  StratumSpec spec;
  for (const auto& s : normal_strata())
    if (s.name == "N_1,1,1") spec = s;
  if (!satisfies(spec.conditions, delta)) r.mismatches.push_back("member violates the [3,3] conditions");
  r.pass = r.mismatches.empty();
  return r;
}

const char* kZ2Y = "x0*(x0^3+x1^3+x2^3+2*x0*x2^2)";

ExampleResult iterated_double(const std::string& name, const char* b_text, std::vector<Rational> q,
                              const std::string& stratum) {
  ExampleResult r;
  r.name = name;
  RingPtr ring = ring_p1112();
  WPoly d1 = parse_polynomial(kZ2Y, ring), b = parse_polynomial(b_text, ring);
  WPoly germ = germ_on_double_plane(d1, b, q, 8);
  SingularityReport rep = classify_branch_point(germ);
  std::string where = to_string(q[0]) + ":" + to_string(q[1]) + ":" + to_string(q[2]) + ":" + to_string(q[3]);
  r.found.push_back({where, rep.verdict, rep.multiplicity_sequence, rep.lct});
  // Q on the ramification curve decides between the two resolutions.
  r.stratum = is_zero(q[3]) ? "Z_2^E" : "Z_2^R";
  if (rep.verdict != Verdict::EllipticDeg2) r.mismatches.push_back("expected elliptic_deg2 at " + where);
  expect_stratum(r, stratum);
  r.pass = r.mismatches.empty();
  return r;
}

struct BiDoubleExpectation {
  std::vector<int> elliptic;
  bool normal;
  std::string stratum;
  std::string kodaira;
};

const std::map<std::string, BiDoubleExpectation>& bidouble_expectations() {
  static const std::map<std::string, BiDoubleExpectation> m{
      {"Z_1", {{1}, true, "Z_1", "1"}},
      {"Z_1,1^A", {{1, 1}, true, "Z_1,1^A", "0"}},
      {"Z_1,1^B", {{1, 1}, true, "Z_1,1^B", "0"}},
      {"Z_4", {{4}, true, "Z_4", "-inf"}},
      {"Z^(dP)", {{}, false, "Z^(dP)", "-inf"}},
      {"Z^(E-)", {{1}, false, "Z^(E-)", "-inf"}},
      {"Z^(P)", {{}, false, "Z^(P)", "-inf"}},
  };
  return m;
}

std::string describe(const CoverReport& rep) {
  std::string e = "[";
  for (std::size_t i = 0; i < rep.elliptic_degrees.size(); ++i)
    e += (i ? "," : "") + std::to_string(rep.elliptic_degrees[i]);
  e += "]";
  return "chi=" + std::to_string(rep.chi) + " K2=" + to_string(rep.K2) + " gorenstein=" +
         (rep.gorenstein ? "yes" : "no") + " normal=" + (rep.normal ? "yes" : "no") + " elliptic=" + e +
         " stratum=" + rep.stratum.value_or("none") + " kappa=" + rep.kodaira_dimension;
}

std::string describe(const BiDoubleExpectation& x) {
  CoverReport rep;
  rep.K2 = 1;
  rep.chi = 2;
  rep.gorenstein = true;
  rep.normal = x.normal;
  rep.elliptic_degrees = x.elliptic;
  rep.stratum = x.stratum;
  rep.kodaira_dimension = x.kodaira;
  return describe(rep);
}

ExampleResult bidouble_case(const std::string& name, const BiDoubleData& data) {
  ExampleResult r;
  r.name = name;
  const auto& x = bidouble_expectations().at(name);
  CoverReport rep = bidouble_report(data);
  keep_non_negligible(r, rep);
  std::vector<Expected> want;
  for (int d : x.elliptic) want.push_back({{}, d == 1 ? Verdict::EllipticDeg1 : Verdict::EllipticDeg4});
  compare(r, want);
  if (describe(rep) != describe(x)) r.mismatches.push_back("expected " + describe(x) + ", got " + describe(rep));
  r.pass = r.mismatches.empty();
  return r;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = [] {
    using V = Verdict;
    std::vector<Entry> v;
    v.push_back({"N12", "bicanonical branch of z^2+y^5+x1^4(x0^6+y^3)+2y^4x0^2", [] {
                   return double_cover_case("N12", {{n12_branch(), 1}},
                                            {{kQ, V::EllipticDeg1}, {kP, V::EllipticDeg2}}, "N_1,2");
                 }});
    v.push_back({"N11R", "printed quintic for two [3,3] points without matching tangent hyperplane", [] {
                   return double_cover_case("N11R", on_cone({{kN11RPrinted, 1}}),
                                            {{{}, V::EllipticDeg1}, {{}, V::EllipticDeg1}}, "N_1,1^R");
                 }});
    v.push_back({"N11R-constructed", "general member with [3,3] points at P and Q, tangents y=0 and slope 1", [] {
                   return double_cover_case("N11R-constructed", {{n11r_constructed(), 1}},
                                            {{kP, V::EllipticDeg1}, {kQ, V::EllipticDeg1}}, "N_1,1^R");
                 }});
    v.push_back({"N112", "(x0x1+y)(y^4+f+g)", [] {
                   std::string quartic = std::string("y^4+") + kN112F + "+" + kN112G;
                   std::vector<BranchComponent> d{{parse_polynomial("x0*x1+y", ring_p112()), 1},
                                                  {parse_polynomial(quartic, ring_p112()), 1}};
                   return double_cover_case("N112", d,
                                            {{kP, V::EllipticDeg1}, {kQ, V::EllipticDeg1}, {kR, V::EllipticDeg2}},
                                            "N_1,1,2");
                 }});
    v.push_back({"N111-f", "pencil generator f satisfies the three [3,3] conditions",
                 [] { return n111_member("N111-f", kN111F); }});
    v.push_back({"N111-g", "pencil generator g satisfies the three [3,3] conditions",
                 [] { return n111_member("N111-g", kN111G); }});
    v.push_back({"N111-general", "(x0x1+y)(x0x1-x1^2+y)(f+g)", [] {
                   std::string cubic = std::string(kN111F) + "+" + kN111G;
                   std::vector<BranchComponent> d{{parse_polynomial(kN111H1, ring_p112()), 1},
                                                  {parse_polynomial(kN111H2, ring_p112()), 1},
                                                  {parse_polynomial(cubic, ring_p112()), 1}};
                   return double_cover_case("N111-general", d,
                                            {{kP, V::EllipticDeg1}, {kQ, V::EllipticDeg1}, {kR, V::EllipticDeg1}},
                                            "N_1,1,1");
                 }});
    v.push_back({"N2-lines", "five hyperplane sections, four through P", [] {
                   return double_cover_case("N2-lines",
                                            on_cone({{"y+3*x0*x1-2*x1^2", 1},
                                                     {"y+2*x0*x1+3*x1^2", 1},
                                                     {"y+7*x0*x1-10*x1^2", 1},
                                                     {"y-3*x0*x1+4*x1^2", 1},
                                                     {"y+x0^2", 1}}),
                                            {{kP, V::EllipticDeg2}}, "N_2");
                 }});
    v.push_back({"N1-lines", "three hyperplane sections tangent at P and a quadric section", [] {
                   return double_cover_case("N1-lines",
                                            on_cone({{"y+x1^2", 1},
                                                     {"y+2*x1^2", 1},
                                                     {"y-3*x1^2", 1},
                                                     {"y^2+x0^4+x1^4+x0^3*x1+3*x0*x1*y", 1}}),
                                            {{kP, V::EllipticDeg1}}, "N_1");
                 }});
    v.push_back({"N22-lines", "four hyperplane sections through P and Q and one more", [] {
                   return double_cover_case("N22-lines",
                                            on_cone({{"y+x0*x1", 1},
                                                     {"y+2*x0*x1", 1},
                                                     {"y+3*x0*x1", 1},
                                                     {"y-4*x0*x1", 1},
                                                     {"y+x0^2+x1^2", 1}}),
                                            {{kP, V::EllipticDeg2}, {kQ, V::EllipticDeg2}}, "N_2,2");
                 }});
    v.push_back({"N11E-lines", "hyperplane sections H1, H2, H3 tangent at P and H3, H4, H5 tangent at Q", [] {
                   return double_cover_case("N11E-lines",
                                            on_cone({{"y+x1^2", 1},
                                                     {"y+2*x1^2", 1},
                                                     {"y", 1},
                                                     {"y+x0^2", 1},
                                                     {"y+2*x0^2", 1}}),
                                            {{kP, V::EllipticDeg1}, {kQ, V::EllipticDeg1}}, "N_1,1^E");
                 }});
    for (const auto& [name, data] : bidouble_examples()) {
      BiDoubleData d = data;
      std::string n = name;
      v.push_back({n, "bi-double cover of the plane", [n, d] { return bidouble_case(n, d); }});
    }
    v.push_back({"Z_2^R", "double cover of Y: y^2 = x0(x0^3+x1^3+x2^3+2x0x2^2) branched on x1(y+x0^2+x2^2)", [] {
                   return iterated_double("Z_2^R", "x1*(y+x0^2+x2^2)", {1, 0, 0, -1}, "Z_2^R");
                 }});
    v.push_back({"Z_2^E", "same Y, branched on the tangent to the cubic at (1:-1:0) and two more lines through it", [] {
                   return iterated_double("Z_2^E", "(x0+x1)*x2*(x0+x1+x2)", {1, -1, 0, 0}, "Z_2^E");
                 }});
    return v;
  }();
  return list;
}

const Entry& find_entry(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw std::out_of_range("unknown example '" + name + "'");
}

WPoly truncate(const WPoly& p, int order) {
  WPoly out(p.ring());
  for (const auto& [e, c] : p.terms()) {
    int d = 0;
    for (int k : e) d += k;
    if (d <= order) out.add_term(e, c);
  }
  return out;
}

WPoly truncated_product(const WPoly& a, const WPoly& b, int order) { return truncate(a * b, order); }

}  // namespace

RingPtr ring_p1112() {
  static const RingPtr r = make_ring({"x0", "x1", "x2", "y"}, {1, 1, 1, 2});
  return r;
}

std::vector<std::string> example_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

std::string example_description(const std::string& name) { return find_entry(name).description; }

ExampleResult verify_example(const std::string& name) { return find_entry(name).run(); }

std::vector<std::pair<std::string, BiDoubleData>> bidouble_examples() {
  const char* cubic = "y2^3+y0^3+2*y1^3+y0*y1*y2+3*y0^2*y2";
  const char* double_line = "y1-2*y2+y0";
  auto d = [](std::vector<BranchComponent> a, std::vector<BranchComponent> b, std::vector<BranchComponent> c) {
    BiDoubleData x;
    x.D = {std::move(a), std::move(b), std::move(c)};
    return x;
  };
  // D0 = {y0 = 0} throughout; P = (0:0:1) lies on D0.
  return {
      {"Z_1", d(in_plane({{"y0", 1}}), in_plane({{"y1", 1}, {"y1-y0", 1}, {"y1+y0", 1}}), in_plane({{cubic, 1}}))},
      {"Z_1,1^A", d(in_plane({{"y0", 1}}), in_plane({{"y1", 1}, {"y1-y0", 1}, {"y1+y0", 1}}),
                    in_plane({{"y2", 1}, {"y2-y0", 1}, {"y2+2*y0", 1}}))},
      {"Z_1,1^B", d(in_plane({{"y0", 1}}), in_plane({{"y1", 1}, {"y1-y0", 1}, {"y1+y0", 1}}),
                    in_plane({{"y2-2*y0", 1}, {"y2-2*y1", 1}, {"y2-y0-y1", 1}}))},
      {"Z_4", d(in_plane({{"y0", 1}}), in_plane({{"y0*y2^2-y0*y1^2+y1^3+y2^3", 1}}),
                in_plane({{"y0*y2^2-4*y0*y1^2+y2^3+2*y1^3", 1}}))},
      {"Z^(dP)", d(in_plane({{"y0", 1}}), in_plane({{double_line, 2}, {"y2-3*y1", 1}}), in_plane({{cubic, 1}}))},
      {"Z^(E-)", d(in_plane({{"y0", 1}}), in_plane({{double_line, 2}, {"y2-3*y1", 1}}),
                   in_plane({{"y1-y2", 1}, {"y1-y0-y2", 1}, {"y1+2*y0-y2", 1}}))},
      {"Z^(P)", d(in_plane({{"y0", 1}}), in_plane({{double_line, 2}, {"y2-3*y1", 1}}),
                  in_plane({{"y1+y2+3*y0", 2}, {"y1-5*y0+2*y2", 1}}))},
  };
}

WPoly germ_on_double_plane(const WPoly& d1, const WPoly& b, const std::vector<Rational>& q_in, int order) {
  RingPtr ring = ring_p1112();
  if (!(*d1.ring() == *ring) || !(*b.ring() == *ring)) throw RingMismatch("double plane data lives in P(1,1,1,2)");
  if (q_in.size() != 4) throw std::invalid_argument("point of P(1,1,1,2) needs four coordinates");
  std::size_t c = 0;
  while (c < 3 && is_zero(q_in[c])) ++c;
  if (c == 3) throw std::domain_error("point over the vertex of P(1,1,1,2)");
  // scale so the chart coordinate is 1
  std::vector<Rational> q(4);
  for (std::size_t i = 0; i < 3; ++i) q[i] = q_in[i] / q_in[c];
  q[3] = q_in[3] / (q_in[c] * q_in[c]);
  if (!is_zero(d1.evaluate(q) - q[3] * q[3])) throw std::invalid_argument("point is not on the double plane");

  RingPtr loc = ring_local();
  WPoly u = WPoly::variable(loc, 0), v = WPoly::variable(loc, 1), zero(loc);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != c) free.push_back(i);
  auto plane_images = [&](const WPoly& a, const WPoly& bb, const WPoly& yy) {
    std::vector<WPoly> im(4, zero);
    im[c] = WPoly(loc, 1);
    im[free[0]] = a + WPoly(loc, q[free[0]]);
    im[free[1]] = bb + WPoly(loc, q[free[1]]);
    im[3] = yy;
    return im;
  };
  WPoly D = substitute(d1, plane_images(u, v, zero));

  if (!is_zero(q[3])) {
    // y = q_y sqrt(1 + w) with w = D / q_y^2 - 1
    WPoly w = D * (Rational(1) / (q[3] * q[3])) - WPoly(loc, 1);
    WPoly s(loc, 1), wk(loc, 1);
    Rational binom = 1;
    for (int k = 1; k <= order; ++k) {
      binom *= (make_rational(1, 2) - (k - 1)) / k;
      wk = truncated_product(wk, w, order);
      if (wk.is_zero()) break;
      s += wk * binom;
    }
    WPoly y = s * q[3];
    return truncate(substitute(b, plane_images(u, v, y)), order);
  }

  // Ramification point: local coordinates (t, y) with one plane coordinate
  // solved from D = y^2.
  Rational du = D.coefficient({1, 0}), dv = D.coefficient({0, 1});
  if (is_zero(du) && is_zero(dv)) throw std::domain_error("branch curve of the double plane is singular there");
  const bool solve_v = !is_zero(dv);
  const Rational lead = solve_v ? dv : du;
  WPoly t = u, yl = v;  // local coordinates on Y
  WPoly other = solve_v ? t : zero;
  WPoly solved = zero;
  WPoly linear = solve_v ? WPoly::variable(loc, 1) * dv : WPoly::variable(loc, 0) * du;
  WPoly rest = D - linear;  // the part not involving the solved linear term
  for (int it = 0; it <= order; ++it) {
    std::vector<WPoly> im = solve_v ? std::vector<WPoly>{t, solved} : std::vector<WPoly>{solved, t};
    WPoly r = truncate(substitute(rest, im), order);
    solved = truncate((yl * yl - r) * (Rational(1) / lead), order);
  }
  (void)other;
  WPoly a = solve_v ? t : solved, bb = solve_v ? solved : t;
  return truncate(substitute(b, plane_images(a, bb, yl)), order);
}

bool satisfies(const std::vector<ConditionSpec>& specs, const WPoly& f) {
  auto deg = weighted_degree(f);
  if (!deg) return false;
  std::vector<Exponent> basis = monomial_basis(*f.ring(), *deg);
  Row coeffs;
  for (const auto& e : basis) coeffs.push_back(f.coefficient(e));
  for (const auto& spec : specs)
    for (const auto& row : vanishing_conditions(spec, f.ring(), *deg)) {
      Rational s = 0;
      for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * coeffs[i];
      if (!is_zero(s)) return false;
    }
  return true;
}

std::vector<TableRow> verify_tables(bool include_covers) {
  std::vector<TableRow> rows;
  auto strata_rows = [&](const std::string& table, const std::vector<StratumSpec>& specs) {
    for (const auto& s : specs) {
      TableRow row{table, s.name, std::to_string(s.expected), "", false, ""};
      try {
        StratumDimension d = stratum_dim(s);
        row.computed = std::to_string(d.dim);
        row.detail = std::to_string(d.system.projective_dim) + " - " + std::to_string(d.stabilizer);
        row.pass = d.dim == s.expected;
      } catch (const std::exception& e) {
        row.computed = "error";
        row.detail = e.what();
      }
      rows.push_back(std::move(row));
    }
  };
  strata_rows("normal", normal_strata());
  strata_rows("non-normal", nonnormal_strata());
  if (!include_covers) return rows;
  for (const auto& [name, data] : bidouble_examples()) {
    TableRow row{"covers", name, describe(bidouble_expectations().at(name)), "", false, ""};
    try {
      row.computed = describe(bidouble_report(data));
      row.pass = row.computed == row.expected;
    } catch (const std::exception& e) {
      row.computed = "error";
      row.detail = e.what();
    }
    rows.push_back(std::move(row));
  }
  for (const char* name : {"Z_2^R", "Z_2^E"}) {
    ExampleResult r = verify_example(name);
    TableRow row{"covers", name, std::string("singularities=[elliptic_deg2] stratum=") + name, "", r.pass, ""};
    std::string e = "[";
    for (std::size_t i = 0; i < r.found.size(); ++i) e += (i ? "," : "") + to_string(r.found[i].verdict);
    row.computed = "singularities=" + e + "] stratum=" + r.stratum.value_or("none");
    for (const auto& m : r.mismatches) row.detail += m + "; ";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gorstab
