#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilzeta/cli.hpp"
#include "serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace nilzeta;
using namespace nilzeta::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "nilzeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("group command") {
  const auto r = call({"group", "comm", "1,0,0,0,0", "0,1,0,0,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "(0,0,1,1/2,1/2)\n");
  const auto j = json::parse(call({"group", "mul", "1,0,0,0,0", "0,1,0,0,0", "--format", "json"}).out);
  CHECK(j == json::array({"1", "1", "1/2", "1/12", "-1/12"}));
  CHECK(call({"group", "pow", "1,1,0,0,0", "1/2"}).code == 1);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(call({}).code == 1);
  CHECK(call({"decompose", "--bogus", "1"}).code == 1);
  CHECK(call({"group", "mul", "1,0,0"}).code == 1);
  CHECK(call({"decompose", "--chi", "0,0,0,1/2,0"}).code == 1);
  CHECK(call({"decompose", "--format", "yaml"}).code == 1);
  CHECK(call({"verify", "nothing"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("computation errors exit with 2") {
  const auto r = call({"zeta", "eval", "--kind", "hurwitz", "--s", "1", "--a", "1/2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("pole") != std::string::npos);
  CHECK(call({"zeta", "eval", "--kind", "zetaIII", "--s", "11/6", "--cutoff", "1.5", "--truncation", "64"}).code == 2);
}

TEST_CASE("decompose output formats and JSON round trip") {
  const std::vector<std::string> base{"decompose", "--r", "1", "--u", "1", "--v", "1", "--e", "0", "--f", "0", "--g", "0", "--h", "0",
                                      "--chi", "0,0,0,0,0", "--cutoff", "1.5"};
  auto args = base;
  args.insert(args.end(), {"--format", "json"});
  const auto r = call(args);
  REQUIRE(r.code == 0);
  const auto terms = decomposition_from_json(json::parse(r.out));
  CHECK(terms == decompose(LatticeSpec::gamma0(), Character::trivial(), 1.5));
  CHECK(call(args).out == r.out);
  auto csv = base;
  csv.insert(csv.end(), {"--format", "csv"});
  const auto c = call(csv);
  CHECK(c.out.rfind("type,p1,p2,p3,multiplicity\n", 0) == 0);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == static_cast<long>(terms.size()) + 1);
}

TEST_CASE("zeta value round trip is bit exact") {
  const auto r = call({"zeta", "eval", "--kind", "epstein2", "--s", "3.25,0.5", "--gram", "2,1/2,1", "--shift", "1/3,0"});
  REQUIRE(r.code == 0);
  ShiftedLattice2 L;
  L.gram = {{{2, rat(1, 2)}, {rat(1, 2), 1}}};
  L.shift = {rat(1, 3), 0};
  const ZetaValue direct = epstein_2d(cplx(3.25, 0.5), L);
  const ZetaValue parsed = zeta_value_from_json(json::parse(r.out));
  CHECK(parsed.value == direct.value);
  CHECK(*parsed.derivative == *direct.derivative);
  CHECK(parsed.abs_error == direct.abs_error);
  CHECK(json::parse(to_json(direct).dump()) == to_json(direct));
  CHECK(rational_from_json(to_json(rat(-7, 3))) == rat(-7, 3));
  CHECK(cplx_from_json(to_json(cplx(HUGE_VAL, 1))).real() == HUGE_VAL);
}

TEST_CASE("torsion command") {
  const auto r = call({"torsion", "--r", "1", "--u", "1", "--v", "1", "--e", "0", "--f", "0", "--g", "0", "--h", "0", "--chi", "1/3,0,0,0,0"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["tau"].get<double>() == 1.0);
  CHECK(j["acyclic"].get<bool>());
  CHECK(j["zetaI"]["prime0"]["provenance"] == "exact");
  const auto t = call({"torsion", "--format", "text"});
  CHECK(t.out.find("tau = 2") != std::string::npos);
}

TEST_CASE("lattice command") {
  const auto j = json::parse(call({"lattice", "--r", "2"}).out);
  CHECK(j["dual"]["covolume"] == "4");
  CHECK(j["generators"].size() == 5);
}

TEST_CASE("plot data") {
  const auto r = call({"plot-data", "--kind", "riemann", "--from", "0.5", "--to", "1.5", "--steps", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("1,nan") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("settings precedence: flag over environment over config") {
  const std::string path = "nilzeta_test_config.txt";
  {
    std::ofstream f(path);
    f << "# test\ncutoff = 1.5\nformat = csv\nprecision = 12\n";
  }
  const auto cfg = load_config(path);
  CHECK(cfg.at("cutoff") == "1.5");
  std::istringstream bad("no equals sign");
  CHECK_THROWS(parse_config(bad));

  const auto from_config = call({"decompose", "--config", path});
  CHECK(from_config.out.rfind("type,", 0) == 0);
  const auto flag = call({"decompose", "--config", path, "--format", "text"});
  CHECK(flag.out.find(" terms\n") != std::string::npos);
  setenv("NILZETA_PRECISION", "40", 1);
  CHECK(call({"zeta", "eval", "--kind", "riemann", "--s", "2", "--config", path, "--format", "json"}).code == 1);
  CHECK(call({"zeta", "eval", "--kind", "riemann", "--s", "2", "--config", path, "--precision", "18", "--format", "json"}).code == 0);
  unsetenv("NILZETA_PRECISION");
  std::remove(path.c_str());
}

TEST_CASE("verify suites") {
  const auto r = call({"verify", "uea"});
  CHECK(r.code == 0);
  CHECK(r.out.find("D∘D=0: pass (exact)") != std::string::npos);
  const auto rd = call({"verify", "repdecomp", "--format", "json"});
  CHECK(rd.code == 0);
  const auto j = json::parse(rd.out);
  CHECK(j["pass"].get<bool>());
  bool sum_rule = false;
  for (const auto& c : j["checks"]) sum_rule = sum_rule || c["name"].get<std::string>().find("sum rule") != std::string::npos;
  CHECK(sum_rule);
  CHECK(suite_names().back() == "all");
}
