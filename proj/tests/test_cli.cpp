#include <catch_amalgamated.hpp>

#include "gysinkit/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

using namespace gysinkit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("gysinkit_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string make_file(const std::string& name, std::vector<std::string> family) {
  family.insert(family.begin(), "make");
  Run r = run(family);
  REQUIRE(r.code == 0);
  return write_file(name, r.out);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

TEST_CASE("fnv1a digest") {
  CHECK(cli::fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(cli::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("gysin on a wedge of three circles") {
  const std::string w3 = make_file("wedge3.json", {"wedge", "3"});
  Run r = run({"gysin", "--quotient", w3, "--compact"});
  CHECK(r.code == cli::success);
  CHECK(r.out.find("K_0(C(dX) x| G) = Z/2 ⊕ Z^3") != std::string::npos);
  CHECK(r.out.find("order of [1] = 2") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  Run j = run({"gysin", "--quotient", w3, "--compact", "--json"});
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["command"] == "gysin");
  CHECK(doc["results"]["K0"]["status"] == "resolved");
  CHECK(doc["results"]["K0"]["group"]["text"] == "Z/2 ⊕ Z^3");
  for (const auto& c : doc["certificates"]) CHECK(c["passed"] == true);
}

TEST_CASE("free product report ends with the vanishing line") {
  Run r = run({"free-product", "2", "3"});
  CHECK(r.code == 0);
  CHECK(ends_with(r.out, "boundary K-theory vanishes\n"));
  Run other = run({"free-product", "3", "3"});
  CHECK(other.code == 0);
  CHECK(other.out.find("boundary K-theory vanishes") == std::string::npos);
  CHECK(run({"free-product", "1", "3"}).code == cli::validation_error);
}

TEST_CASE("verify-dual prints an all-pass table") {
  Run r = run({"verify-dual", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify-dual", "--n", "5"}).code == cli::unsupported);
  CHECK(run({"verify-dual", "--n", "0"}).code == cli::validation_error);
  CHECK(run({"verify-dual", "--n", "2", "--L", "1/2"}).code == cli::validation_error);
  CHECK(run({"verify-dual", "--n", "2", "--L", "1/6", "--lambda", "5/4"}).code == cli::validation_error);

  const std::string rp2 = make_file("rp2.json", {"rp2"});
  Run c = run({"verify-dual", "--n", "2", "--complex", rp2, "--json"});
  CHECK(c.code == 0);
  auto doc = nlohmann::json::parse(c.out);
  CHECK(doc["command"] == "verify-dual");
}

TEST_CASE("malformed input exits with 2 and a location") {
  const std::string bad = write_file("bad.json", "{\"maximal_simplices\": [[0, 1],\n");
  Run r = run({"chi", bad});
  CHECK(r.code == cli::validation_error);
  CHECK(r.err.find("line 2") != std::string::npos);

  const std::string wrong = write_file("wrong.json", R"({"maximal_simplices": [[0, "x"]]})");
  Run w = run({"homology", wrong});
  CHECK(w.code == cli::validation_error);
  CHECK(w.err.find("/maximal_simplices/0/1") != std::string::npos);

  CHECK(run({"chi", (scratch() / "missing.json").string()}).code == cli::validation_error);
  CHECK(run({"no-such-command"}).code == cli::validation_error);
  CHECK(run({}).code == cli::validation_error);
}

TEST_CASE("unsupported dimension and mode") {
  const std::string tet = make_file("tet.json", {"tetrahedron"});
  CHECK(run({"ktheory", tet}).code == cli::unsupported);
  CHECK(run({"ktheory", tet, "--mode", "assume-collapse"}).code == cli::success);
  CHECK(run({"ktheory", tet, "--mode", "bogus"}).code == cli::validation_error);
  CHECK(run({"gysin", "--quotient", tet}).code == cli::unsupported);
}

TEST_CASE("chi, homology and euler-comb subcommands") {
  const std::string torus = make_file("torus.json", {"torus"});
  Run c = run({"chi", torus, "--json"});
  REQUIRE(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["results"]["chi"] == 0);

  Run h = run({"homology", torus});
  CHECK(h.code == 0);
  CHECK(h.out.find("H_1 = Z^2") != std::string::npos);

  const std::string refl = make_file("refl.json", {"reflection-circle"});
  Run e = run({"euler-comb", refl});
  CHECK(e.code == 0);
  CHECK(e.out.find("dim_{H2{0,1},A0} + dim_{H2{0,1},A2} - dim_{1}") != std::string::npos);

  const std::string psl = make_file("psl.json", {"psl2z"});
  Run p = run({"euler-comb", psl});
  CHECK(p.code == 0);
  CHECK(p.out.find("dim_{Z/2} + dim_{Z/3} - dim_{1}") != std::string::npos);
  CHECK(p.out.find("-1/6") != std::string::npos);

  const std::string flip = make_file("flip.json", {"edge-flip"});
  CHECK(run({"euler-comb", flip}).code == 0);
}

TEST_CASE("make covers every family and round-trips through chi") {
  for (std::vector<std::string> fam : std::vector<std::vector<std::string>>{
           {"wedge", "2"}, {"surface", "2"}, {"circle"}, {"torus"}, {"rp2"}, {"sphere"}, {"point"},
           {"interval"}, {"disk"}, {"tetrahedron"}}) {
    INFO(fam[0]);
    const std::string f = make_file("fam.json", fam);
    CHECK(run({"chi", f}).code == 0);
  }
  CHECK(run({"make", "free-product", "2", "5"}).code == 0);
  CHECK(run({"make", "surface", "0"}).code == cli::validation_error);
  CHECK(run({"make", "nothing"}).code == cli::validation_error);
}

TEST_CASE("reports are byte-stable") {
  const std::string s2 = make_file("s2.json", {"surface", "2"});
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"gysin", "--quotient", s2},
           {"gysin", "--quotient", s2, "--json"},
           {"free-product", "2", "3", "--json"},
           {"verify-dual", "--n", "1"}}) {
    Run a = run(args);
    Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

#ifdef GYSINKIT_CLI_PATH
TEST_CASE("the installed binary matches the library entry point") {
  const fs::path out = scratch() / "binary_out.txt";
  const std::string cmd = std::string("\"") + GYSINKIT_CLI_PATH + "\" free-product 2 3 > \"" + out.string() + "\"";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == run({"free-product", "2", "3"}).out);

  const std::string fail = std::string("\"") + GYSINKIT_CLI_PATH + "\" verify-dual --n 9 > /dev/null 2>&1";
  int status = std::system(fail.c_str());
  CHECK(WEXITSTATUS(status) == cli::unsupported);
}
#endif
