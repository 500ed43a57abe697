#include "cli.hpp"

#include "gorstab/canring.hpp"
#include "gorstab/catalog.hpp"
#include "gorstab/parse.hpp"
#include "gorstab/strata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace gorstab::cli {

InputError::InputError(const std::string& what, int l, int c) : std::invalid_argument(what), line(l), column(c) {}

namespace {

using Json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// One "label: body | key=value ..." line with source positions.
struct Line {
  int number = 0;
  std::string label;
  std::string body;
  int body_column = 1;
  std::vector<std::pair<std::string, std::string>> keys;
};

std::vector<Line> split_records(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (trim(raw).empty()) continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos) throw InputError("expected 'label: value'", number, 1);
    Line l;
    l.number = number;
    l.label = trim(raw.substr(0, colon));
    std::string rest = raw.substr(colon + 1);
    std::string tail;
    if (auto bar = rest.find('|'); bar != std::string::npos) {
      tail = rest.substr(bar + 1);
      rest.erase(bar);
    }
    std::size_t lead = 0;
    while (lead < rest.size() && std::isspace(static_cast<unsigned char>(rest[lead]))) ++lead;
    l.body_column = static_cast<int>(colon + 2 + lead);
    l.body = trim(rest);
    std::istringstream ts(tail);
    std::string tok;
    while (ts >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw InputError("expected key=value, got '" + tok + "'", number, 0);
      std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
      if (k == "curve") {
        std::string more;
        std::getline(ts, more);
        v += more;
      }
      l.keys.emplace_back(k, trim(v));
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::optional<std::string> key(const Line& l, const std::string& k) {
  for (const auto& [kk, v] : l.keys)
    if (kk == k) return v;
  return std::nullopt;
}

int to_int(const std::string& s, const Line& l, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("bad ") + what + " '" + s + "'", l.number, 0);
}

WPoly poly_at(const std::string& text, const RingPtr& ring, int line, int column) {
  try {
    return parse_polynomial(text, ring);
  } catch (const ParseError& e) {
    throw InputError(e.message(), line + e.line() - 1, column + e.column() - 1);
  }
}

int y_weight(const RingPtr& ring) {
  const auto& w = ring->weights();
  if (w.size() != 3 || w[0] != 1 || w[1] != 1) throw InputError("points need a ring with weights 1, 1, w");
  return w[2];
}

PointWPS point_of(const std::string& text, const RingPtr& ring, const Line& l) {
  try {
    return PointWPS::parse(text, y_weight(ring));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("bad point '") + text + "': " + e.what(), l.number, 0);
  }
}

RingPtr ring_line(std::vector<Line>& lines, RingPtr fallback) {
  if (!lines.empty() && lines.front().label == "ring") {
    RingPtr r;
    try {
      r = make_ring(lines.front().body);
    } catch (const std::exception& e) {
      throw InputError(e.what(), lines.front().number, lines.front().body_column);
    }
    lines.erase(lines.begin());
    return r;
  }
  return fallback;
}

BranchComponent component_of(const Line& l, const RingPtr& ring) {
  BranchComponent c{poly_at(l.body, ring, l.number, l.body_column), 1};
  if (auto m = key(l, "multiplicity")) c.multiplicity = to_int(*m, l, "multiplicity");
  if (auto d = key(l, "degree")) {
    int want = to_int(*d, l, "degree");
    auto got = c.poly.is_zero() ? std::nullopt : weighted_degree(c.poly);
    if (!got || *got != want)
      throw InputError("declared degree " + *d + " does not match the polynomial", l.number, 0);
  }
  return c;
}

// Output records: JSON lines, or "type key=value ..." for humans.
struct Writer {
  std::ostream& out;
  bool structured = false;

  static std::string flat(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_null()) return "-";
    if (v.is_array()) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + flat(v[i]);
      return s + "]";
    }
    if (v.is_object()) {
      std::string s = "{";
      bool first = true;
      for (const auto& [k, x] : v.items()) {
        s += (first ? "" : ", ") + k + "=" + flat(x);
        first = false;
      }
      return s + "}";
    }
    return v.dump();
  }

  void emit(const std::string& type, const Json& fields) {
    if (structured) {
      Json rec;
      rec["record"] = type;
      for (const auto& [k, v] : fields.items()) rec[k] = v;
      out << rec.dump() << "\n";
      return;
    }
    out << type;
    for (const auto& [k, v] : fields.items()) out << " " << k << "=" << flat(v);
    out << "\n";
  }
};

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json ints(const std::vector<int>& v) { return Json(v); }

Json cover_json(const CoverReport& r) {
  Json j;
  j["K2"] = to_string(r.K2);
  j["chi"] = r.chi;
  j["cartier_index"] = r.cartier_index;
  j["gorenstein"] = r.gorenstein;
  j["normal"] = r.normal;
  j["elliptic_degrees"] = ints(r.elliptic_degrees);
  j["normalisation_type"] = r.normalisation_type ? Json(*r.normalisation_type) : Json();
  j["stratum"] = r.stratum ? Json(*r.stratum) : Json();
  j["vertex"] = r.vertex ? Json(*r.vertex) : Json();
  j["minimal_resolution"] = r.minimal_resolution;
  j["kodaira_dimension"] = r.kodaira_dimension;
  j["certified_nodes"] = r.certified_nodes;
  return j;
}

Json point_json(const CoverPoint& p) {
  Json j;
  j["point"] = p.point;
  j["verdict"] = to_string(p.verdict);
  j["multiplicity_sequence"] = ints(p.multiplicity_sequence);
  j["lct"] = to_string(p.lct);
  return j;
}

void emit_cover(Writer& w, const CoverReport& r) {
  w.emit("cover", cover_json(r));
  for (const auto& p : r.singularities) w.emit("singularity", point_json(p));
  for (const auto& s : r.warnings) w.emit("warning", Json{{"message", s}});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json components_json(const std::vector<BranchComponent>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(Json{{"poly", to_string(c.poly)}, {"multiplicity", c.multiplicity}});
  return a;
}

}  // namespace

bool BranchFile::bidouble() const { return !D[0].empty() || !D[1].empty() || !D[2].empty(); }

BranchFile parse_branch_file(const std::string& text, RingPtr default_ring) {
  std::vector<Line> lines = split_records(text);
  BranchFile f;
  f.ring = ring_line(lines, std::move(default_ring));
  for (const auto& l : lines) {
    if (l.label == "component") f.components.push_back(component_of(l, f.ring));
    else if (l.label == "D0" || l.label == "D1" || l.label == "D2") f.D[l.label[1] - '0'].push_back(component_of(l, f.ring));
    else if (l.label == "point") f.points.push_back(point_of(l.body, f.ring, l));
    else throw InputError("unknown record '" + l.label + "'", l.number, 1);
  }
  if (!f.components.empty() && f.bidouble()) throw InputError("mix of component and D0/D1/D2 records");
  if (f.components.empty() && !f.bidouble()) throw InputError("no branch components");
  return f;
}

ConditionFile parse_condition_file(const std::string& text, RingPtr default_ring) {
  std::vector<Line> lines = split_records(text);
  ConditionFile f;
  f.ring = ring_line(lines, std::move(default_ring));
  for (const auto& l : lines) {
    if (l.label == "degree") {
      f.degree = to_int(l.body, l, "degree");
      continue;
    }
    if (l.label != "condition") throw InputError("unknown record '" + l.label + "'", l.number, 1);
    auto p = key(l, "point");
    if (!p) throw InputError("condition needs point=", l.number, 0);
    PointWPS pt = point_of(*p, f.ring, l);
    auto tangent = [&]() {
      auto t = key(l, "tangent");
      if (!t) throw InputError("condition needs tangent=", l.number, 0);
      try {
        return Direction::parse(*t);
      } catch (const std::exception& e) {
        throw InputError(std::string("bad tangent: ") + e.what(), l.number, 0);
      }
    };
    if (l.body == "quadruple") f.conditions.push_back(ConditionSpec::quadruple(pt));
    else if (l.body == "three_three") f.conditions.push_back(ConditionSpec::three_three(pt, tangent()));
    else if (l.body == "tangent") f.conditions.push_back(ConditionSpec::tangent_to(pt, tangent()));
    else if (l.body == "mult") {
      auto m = key(l, "m");
      if (!m) throw InputError("mult condition needs m=", l.number, 0);
      f.conditions.push_back(ConditionSpec::mult(pt, to_int(*m, l, "multiplicity")));
    } else if (l.body == "tangent_curve") {
      auto c = key(l, "curve");
      if (!c) throw InputError("tangent_curve condition needs curve=", l.number, 0);
      f.conditions.push_back(ConditionSpec::tangent_to_curve(pt, poly_at(*c, f.ring, l.number, 0)));
    } else {
      throw InputError("unknown condition kind '" + l.body + "'", l.number, l.body_column);
    }
  }
  return f;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for Gorenstein stable surfaces with K^2 = 1"};
  app.name("gorstab");
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand
  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "structured"}));

  Writer w{out};
  int status = 0;
  std::function<void()> action;

  // basis / dim
  std::string ring_decl = "x0:1, x1:1, y:2";
  int degree = 10;
  std::string cond_path;
  bool member = false;
  std::uint64_t seed = 1;
  auto* basis = app.add_subcommand("basis", "Monomial basis, or a basis of a conditioned system");
  basis->add_option("--ring", ring_decl, "Ring declaration");
  basis->add_option("--degree", degree, "Weighted degree");
  basis->add_option("--conditions", cond_path, "Condition file");
  auto* dim = app.add_subcommand("dim", "Dimension of a (conditioned) space of forms");
  dim->add_option("--ring", ring_decl, "Ring declaration");
  dim->add_option("--degree", degree, "Weighted degree");
  dim->add_option("--conditions", cond_path, "Condition file");
  dim->add_flag("--member", member, "Also print a general member");
  dim->add_option("--seed", seed, "Seed for the general member");

  auto load_conditions = [&](RingPtr& ring) {
    std::vector<ConditionSpec> specs;
    if (cond_path.empty()) return specs;
    ConditionFile f = parse_condition_file(read_file(cond_path), ring);
    ring = f.ring;
    if (f.degree) degree = *f.degree;
    return f.conditions;
  };

  basis->callback([&] {
    action = [&] {
      RingPtr ring = make_ring(ring_decl);
      auto specs = load_conditions(ring);
      if (specs.empty()) {
        for (const auto& e : monomial_basis(*ring, degree))
          w.emit("monomial", Json{{"term", to_string(WPoly::monomial(ring, e))}});
      } else {
        for (const auto& p : system_basis(specs, ring, degree)) w.emit("basis", Json{{"poly", to_string(p)}});
      }
    };
  });
  dim->callback([&] {
    action = [&] {
      RingPtr ring = make_ring(ring_decl);
      auto specs = load_conditions(ring);
      SystemDimension d = linear_system_dim(specs, ring, degree);
      w.emit("dim", Json{{"ring", ring->to_string()},
                         {"degree", degree},
                         {"monomials", d.basis_size},
                         {"rank", d.rank},
                         {"h0", d.h0},
                         {"projective_dim", d.projective_dim}});
      if (member) w.emit("member", Json{{"seed", seed}, {"poly", to_string(general_member(specs, ring, degree, seed))}});
    };
  });

  // classify
  std::string germ_text, vars = "x,y";
  auto* classify = app.add_subcommand("classify", "Classify a plane curve germ at the origin");
  classify->add_option("--germ", germ_text, "Germ polynomial")->required();
  classify->add_option("--vars", vars, "Names of the two local variables");
  classify->callback([&] {
    action = [&] {
      auto comma = vars.find(',');
      if (comma == std::string::npos) throw InputError("--vars takes two names separated by a comma");
      RingPtr named = make_ring({trim(vars.substr(0, comma)), trim(vars.substr(comma + 1))}, {1, 1});
      WPoly g = poly_at(germ_text, named, 1, 1).rebased(ring_local());
      SingularityReport r = classify_branch_point(g);
      Json t = Json::array();
      for (const auto& d : r.tangents) t.push_back(d.to_string());
      w.emit("germ", Json{{"verdict", to_string(r.verdict)},
                          {"multiplicity_sequence", ints(r.multiplicity_sequence)},
                          {"lct", to_string(r.lct)},
                          {"tangents", t}});
    };
  });

  // cover / bidouble / normalise
  std::string branch_path;
  std::vector<std::string> extra_points;
  auto* cover = app.add_subcommand("cover", "Double cover of P(1,1,2) branched on the given data");
  cover->add_option("file", branch_path, "Branch-data file")->required();
  cover->add_option("--point", extra_points, "Extra point a:b:c to examine");
  cover->callback([&] {
    action = [&] {
      BranchFile f = parse_branch_file(read_file(branch_path), ring_p112());
      if (f.bidouble()) throw InputError("cover takes component records; use bidouble for D0/D1/D2");
      std::vector<PointWPS> pts = f.points;
      for (const auto& p : extra_points) pts.push_back(PointWPS::parse(p));
      try {
        emit_cover(w, double_cover_report(f.components, pts));
      } catch (const NotLogCanonical& e) {
        w.emit("cover", Json{{"log_canonical", false}, {"reason", e.what()}});
        status = 1;
      }
    };
  });
  auto* bidouble = app.add_subcommand("bidouble", "Bi-double cover of the plane");
  bidouble->add_option("file", branch_path, "Branch-data file with D0, D1, D2 records")->required();
  bidouble->callback([&] {
    action = [&] {
      BranchFile f = parse_branch_file(read_file(branch_path), ring_p2());
      if (!f.bidouble()) throw InputError("bidouble needs D0/D1/D2 records");
      BiDoubleData data{f.D};
      BiDoubleNumbers n = bidouble_numbers({data.degree(0), data.degree(1), data.degree(2)});
      w.emit("numbers", Json{{"d", n.d},
                             {"a", n.a},
                             {"chi", n.chi},
                             {"two_k_degree", n.two_k_degree},
                             {"K2", to_string(n.K2)},
                             {"common_point", bidouble_common_point(data)}});
      emit_cover(w, bidouble_report(data));
    };
  });
  auto* normalise = app.add_subcommand("normalise", "Normalisation type, or standard form of bi-double data");
  normalise->add_option("file", branch_path, "Branch-data file")->required();
  normalise->callback([&] {
    action = [&] {
      BranchFile f = parse_branch_file(read_file(branch_path), ring_p112());
      if (f.bidouble()) {
        if (f.ring->weights() != ring_p2()->weights()) throw InputError("bi-double data lives on P^2");
        BiDoubleData data{f.D};
        for (auto& D : data.D)
          for (auto& c : D) c.poly = c.poly.rebased(ring_p2());
        BiDoubleData n = bidouble_normalise(data);
        for (int i = 0; i < 3; ++i) w.emit("D" + std::to_string(i), Json{{"components", components_json(n.D[i])}});
      } else {
        w.emit("normalisation", Json{{"type", normalisation_type(f.components)}});
      }
    };
  });

  // hilbert
  std::string model = "hypersurface", f1_text, f2_text;
  int m_max = 20;
  bool exact = false;
  auto* hilbert = app.add_subcommand("hilbert", "Plurigenera of the canonical ring models");
  hilbert->add_option("--model", model, "hypersurface or ci")->check(CLI::IsMember({"hypersurface", "ci"}));
  hilbert->add_option("--f", f1_text, "Hypersurface equation, or f1 for the complete intersection");
  hilbert->add_option("--f2", f2_text, "f2 for the complete intersection");
  hilbert->add_option("--max", m_max, "Largest m");
  hilbert->add_flag("--exact", exact, "Complete intersection: rank the multiplication map too");
  hilbert->callback([&] {
    action = [&] {
      std::vector<long> h;
      long base = 3;
      std::optional<CIModel> ci;
      if (model == "hypersurface") {
        if (f1_text.empty()) f1_text = "z^2+y^5+x0^10+x1^10";
        HypersurfaceModel hm(poly_at(f1_text, ring_s1(), 1, 1));
        AmbientCheck a = ambient_smoothness_check(hm);
        w.emit("ambient", Json{{"ok", a.ok}, {"failures", a.failures}});
        h = hilbert_hypersurface(hm, m_max);
        Json b = Json::array();
        for (const auto& e : monomial_basis(*ring_s1(), 2)) b.push_back(to_string(WPoly::monomial(ring_s1(), e)));
        w.emit("bicanonical_basis", Json{{"size", b.size()}, {"monomials", b}});
      } else {
        if (f1_text.empty()) f1_text = "z1^2+y1^3+x0^6";
        if (f2_text.empty()) f2_text = "z2^2+y2^3+x0^6";
        ci.emplace(poly_at(f1_text, ring_s2(), 1, 1), poly_at(f2_text, ring_s2(), 1, 1));
        AmbientCheck a = ambient_smoothness_check(*ci);
        w.emit("ambient", Json{{"ok", a.ok}, {"failures", a.failures}});
        h = hilbert_ci(*ci, m_max);
        base = 2;
      }
      for (int m = 0; m <= m_max; ++m) {
        Json j{{"m", m}, {"h0", h[m]}};
        if (m >= 2) {
          long want = base + static_cast<long>(m) * (m - 1) / 2;
          j["expected"] = want;
          j["match"] = h[m] == want;
          if (h[m] != want) status = 1;
        }
        if (ci && exact) {
          long e = hilbert_ci_exact(*ci, m);
          j["exact"] = e;
          if (e != h[m]) status = 1;
        }
        w.emit("plurigenus", j);
      }
    };
  });

  // branch
  std::string delta_text;
  bool with_report = false;
  auto* branch = app.add_subcommand("branch", "Bicanonical branch curve of a hypersurface, or the converse");
  branch->add_option("--f", f1_text, "Equation of X in P(1,1,2,5)");
  branch->add_option("--delta", delta_text, "Branch equation on P(1,1,2)");
  branch->add_flag("--report", with_report, "Also run the double cover report");
  branch->callback([&] {
    action = [&] {
      if (f1_text.empty() == delta_text.empty()) throw InputError("give exactly one of --f and --delta");
      if (!delta_text.empty()) {
        HypersurfaceModel hm = hypersurface_from_branch(poly_at(delta_text, ring_p112(), 1, 1));
        w.emit("hypersurface", Json{{"f", to_string(hm.f)}});
        return;
      }
      HypersurfaceModel hm(poly_at(f1_text, ring_s1(), 1, 1));
      AmbientCheck a = ambient_smoothness_check(hm);
      w.emit("ambient", Json{{"ok", a.ok}, {"failures", a.failures}});
      if (!a.ok) {
        status = 1;
        return;
      }
      auto delta = bicanonical_branch(hm);
      w.emit("branch", Json{{"delta", to_string(delta.front().poly)}});
      w.emit("base_point", Json{{"coordinates", rationals(base_point_check(hm))}});
      CurveRestriction c = canonical_curve_restriction(hm);
      w.emit("canonical_curve", Json{{"relation", to_string(c.relation)},
                                     {"y5_coefficient", to_string(c.y5_coefficient)},
                                     {"g", to_string(c.g)},
                                     {"valid", c.valid},
                                     {"reason", c.reason}});
      if (with_report) {
        try {
          emit_cover(w, double_cover_report(delta));
        } catch (const NotLogCanonical& e) {
          w.emit("cover", Json{{"log_canonical", false}, {"reason", e.what()}});
          status = 1;
        }
      }
    };
  });

  // stratum
  std::string stratum_name;
  std::vector<std::string> slopes;
  int members = 3;
  auto* stratum = app.add_subcommand("stratum", "Dimension count for a stratum, or the N_1,1,2 pencil test");
  stratum->add_option("name", stratum_name, "Stratum name; all when omitted");
  stratum->add_option("--slopes", slopes, "Run the N_1,1,2 tangent-slope test for these slopes");
  stratum->add_option("--members", members, "Members tried per slope");
  stratum->add_option("--seed", seed, "Seed for general members");
  stratum->callback([&] {
    action = [&] {
      if (!slopes.empty()) {
        std::vector<Rational> s;
        for (const auto& t : slopes) s.push_back(parse_rational(t));
        for (const auto& p : n112_dichotomy(s, members, seed))
          w.emit("pencil", Json{{"slope", to_string(p.slope)},
                                {"projective_dim", p.projective_dim},
                                {"reduced_member", p.reduced_member}});
        return;
      }
      std::vector<StratumSpec> all = normal_strata();
      for (auto& s : nonnormal_strata()) all.push_back(std::move(s));
      bool found = false;
      for (const auto& s : all) {
        if (!stratum_name.empty() && s.name != stratum_name) continue;
        found = true;
        StratumDimension d = stratum_dim(s);
        w.emit("stratum", Json{{"name", s.name},
                               {"degree", s.degree},
                               {"system_dim", d.system.projective_dim},
                               {"stabilizer", d.stabilizer},
                               {"dim", d.dim},
                               {"expected", s.expected}});
        if (d.dim != s.expected) status = 1;
      }
      if (!found) throw InputError("unknown stratum '" + stratum_name + "'");
    };
  });

  // verify-tables / verify-example
  bool covers = false;
  auto* tables = app.add_subcommand("verify-tables", "Recompute the strata tables");
  tables->add_flag("--covers", covers, "Include the bi-double and iterated double cover examples");
  tables->callback([&] {
    action = [&] {
      for (const auto& r : verify_tables(covers)) {
        w.emit("row", Json{{"table", r.table},
                           {"name", r.name},
                           {"expected", r.expected},
                           {"computed", r.computed},
                           {"pass", r.pass},
                           {"detail", r.detail}});
        if (!r.pass) status = 1;
      }
    };
  });
  std::vector<std::string> names;
  bool list = false;
  auto* example = app.add_subcommand("verify-example", "Check the singularities of a catalogued example");
  example->add_option("names", names, "Example names; all when omitted");
  example->add_flag("--list", list, "List the catalogue");
  example->callback([&] {
    action = [&] {
      if (list) {
        for (const auto& n : example_names()) w.emit("example", Json{{"name", n}, {"description", example_description(n)}});
        return;
      }
      if (names.empty()) names = example_names();
      for (const auto& n : names) {
        ExampleResult r = verify_example(n);
        Json found = Json::array();
        for (const auto& p : r.found) found.push_back(point_json(p));
        w.emit("example", Json{{"name", r.name},
                               {"pass", r.pass},
                               {"stratum", r.stratum ? Json(*r.stratum) : Json()},
                               {"found", found},
                               {"mismatches", r.mismatches},
                               {"warnings", r.warnings}});
        if (!r.pass) status = 1;
      }
    };
  });

  std::vector<const char*> argv{"gorstab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  w.structured = format == "structured";
  try {
    action();
  } catch (const InputError& e) {
    err << "error";
    if (e.line) err << " at line " << e.line;
    if (e.column) err << ", column " << e.column;
    err << ": " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}

}  // namespace gorstab::cli
