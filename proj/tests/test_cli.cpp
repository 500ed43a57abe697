#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using gorstab::cli::run;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = run(args, o, e);
  return {c, o.str(), e.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> v;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) v.push_back(nlohmann::json::parse(line));
  return v;
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("gorstab_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("dim") {
  Out o = call({"dim", "--ring", "x0:1,x1:1,y:2", "--degree", "10", "--format", "structured"});
  CHECK(o.code == 0);
  auto r = records(o.out);
  REQUIRE(r.size() == 1);
  CHECK(r[0]["h0"] == 36);
  CHECK(call({"dim", "--ring", "x0:1,x1:1,y:2,z:5"}).out.find("h0=49") != std::string::npos);
}

TEST_CASE("classify") {
  Out o = call({"classify", "--germ", "x*y"});
  CHECK(o.code == 0);
  CHECK(o.out.find("verdict=negligible") != std::string::npos);
  Out bad = call({"classify", "--germ", "x + "});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("column 5") != std::string::npos);
  CHECK(call({"classify", "--germ", "u*v", "--vars", "u,v"}).code == 0);
}

TEST_CASE("bad command lines") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"dim", "--degree", "ten"}).code == 2);
  CHECK(call({"verify-example", "nope"}).code == 2);
}

TEST_CASE("verify-tables emits twelve passing rows") {
  Out o = call({"verify-tables", "--format", "structured"});
  CHECK(o.code == 0);
  auto r = records(o.out);
  CHECK(r.size() == 12);
  for (const auto& x : r) CHECK(x["pass"] == true);
}

TEST_CASE("verify-example exit codes") {
  CHECK(call({"verify-example", "N12"}).code == 0);
  CHECK(call({"verify-example", "N11R"}).code == 1);
}

TEST_CASE("cover from a branch-data file") {
  std::string path = temp_file("n1.txt",
                               "ring: x0:1, x1:1, y:2\n"
                               "# three sections tangent at (1:0:0)\n"
                               "component: y + x1^2 | degree=2\n"
                               "component: y + 2*x1^2\n"
                               "component: y - 3*x1^2\n"
                               "component: y^2+x0^4+x1^4+x0^3*x1+3*x0*x1*y | multiplicity=1 degree=4\n");
  Out o = call({"cover", path, "--format", "structured"});
  CHECK(o.code == 0);
  auto r = records(o.out);
  REQUIRE(!r.empty());
  CHECK(r[0]["stratum"] == "N_1");
  CHECK(r[0]["chi"] == 3);

  std::string bad = temp_file("bad.txt", "component: y + x1^2\ncomponent: y +* x0\n");
  Out e = call({"cover", bad});
  CHECK(e.code == 2);
  CHECK(e.err.find("line 2, column 15") != std::string::npos);

  std::string deg = temp_file("deg.txt", "component: y + x1^2 | degree=3\n");
  CHECK(call({"cover", deg}).code == 2);
}

TEST_CASE("bidouble and normalise") {
  std::string path = temp_file("z1.txt",
                               "D0: y0\n"
                               "D1: y1\nD1: y1-y0\nD1: y1+y0\n"
                               "D2: y2^3+y0^3+2*y1^3+y0*y1*y2+3*y0^2*y2\n");
  Out o = call({"bidouble", path, "--format", "structured"});
  CHECK(o.code == 0);
  auto r = records(o.out);
  REQUIRE(r.size() >= 2);
  CHECK(r[0]["chi"] == 2);
  CHECK(r[1]["stratum"] == "Z_1");

  std::string dp = temp_file("dp.txt", "component: y | multiplicity=2\ncomponent: y^3+x0^6+x1^6+x0*x1*y^2\n");
  Out n = call({"normalise", dp});
  CHECK(n.code == 0);
  CHECK(n.out.find("type=dP") != std::string::npos);
}

TEST_CASE("condition files") {
  std::string path = temp_file("cond.txt",
                               "ring: x0:1, x1:1, y:2\n"
                               "degree: 10\n"
                               "condition: three_three | point=1:0:0 tangent=-1:1\n"
                               "condition: three_three | point=0:1:0 tangent=-1:1\n");
  auto r = records(call({"dim", "--conditions", path, "--format", "structured"}).out);
  REQUIRE(r.size() == 1);
  CHECK(r[0]["rank"] == 23);
  std::string bad = temp_file("cond_bad.txt", "condition: sextuple | point=1:0:0\n");
  CHECK(call({"dim", "--conditions", bad}).code == 2);
}

TEST_CASE("hilbert, branch and stratum") {
  CHECK(call({"hilbert"}).code == 0);
  CHECK(call({"hilbert", "--model", "ci", "--exact", "--max", "10"}).code == 0);
  Out b = call({"branch", "--f", "z^2+y^5+x1^4*(x0^6+y^3)+2*y^4*x0^2", "--report"});
  CHECK(b.code == 0);
  CHECK(b.out.find("stratum=N_1,2") != std::string::npos);
  Out s = call({"stratum", "N_1", "--format", "structured"});
  CHECK(records(s.out).at(0)["dim"] == 19);
  CHECK(call({"stratum", "N_9"}).code == 2);
}

TEST_CASE("structured output is deterministic") {
  auto a = call({"verify-example", "N111-general", "--format", "structured"});
  auto b = call({"verify-example", "N111-general", "--format", "structured"});
  CHECK(a.out == b.out);
}
