#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "ehpcalc/cli.hpp"
#include "ehpcalc/constructions.hpp"
#include "ehpcalc/errors.hpp"
#include "ehpcalc/expressions.hpp"
#include "ehpcalc/homology.hpp"

using namespace ehpcalc;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("space expressions") {
  CHECK(parse_space("S2").counts() == build_sphere(2).counts());
  CHECK(parse_space("S1 x S1").counts() == std::vector<std::size_t>{1, 3, 2});
  CHECK(parse_space("S1 ^ S1 ^ S1").counts() == smash_power(build_sphere(1), 3).counts());
  CHECK(parse_space("S1 + S1").counts() == std::vector<std::size_t>{1, 2});
  CHECK(parse_space("J(S1,2)").counts() == std::vector<std::size_t>{1, 2, 2});
  CHECK(parse_space("Q(S1+S1, 2)").counts() == smash_power(wedge(build_sphere(1), build_sphere(1)), 2).counts());
  CHECK(parse_space("(S1 + S2) ^ S1").counts() == smash(wedge(build_sphere(1), build_sphere(2)), build_sphere(1)).counts());
  CHECK(parse_space("pt").size() == 1);
  CHECK_THROWS_AS(parse_space("S"), ParseError);
  CHECK_THROWS_AS(parse_space("S1 +"), ParseError);
  CHECK_THROWS_AS(parse_space("J(S1,0)"), IndexOutOfRange);
  CHECK_THROWS_AS(parse_space("G"), Unsupported);
  CHECK(parse_word_letters("x|y|z") == std::vector<std::string>{"x", "y", "z"});
  CHECK(parse_word_letters("(s0 e1 | e2)") == std::vector<std::string>{"s0 e1", "e2"});
  CHECK(parse_word_letters("").empty());
  CHECK_THROWS_AS(parse_word_letters("x||y"), ParseError);
}

TEST_CASE("command line examples") {
  auto r = call({"ehp", "hp", "-p", "2", "-q", "1", "--field", "real-closed"});
  CHECK(r.code == 0);
  CHECK(r.out == "h (rank 2, signature 0)\n");

  r = call({"homology", "--space", "J(S1,2)"});
  CHECK(r.out == "H1 = Z\nH2 = Z\n");
  r = call({"--format", "json", "homology", "--space", "J(S1,2)"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["homology"].size() == 2);
  CHECK(j["homology"][1]["degree"] == 2);
  CHECK(j["homology"][1]["free_rank"] == 1);

  r = call({"hopf", "--word", "x|y|z", "-r", "2"});
  CHECK(r.out == "(x^y)(x^z)(y^z)\n");

  r = call({"ehp", "sequence", "--space", "S[2+3a]"});
  CHECK(r.out.rfind("π_{5+6α}(S^{3+3α}) → π_{5+6α}(S^{5+6α}) →P π_{3+6α}(S^{2+3α}) → π_{4+6α}(S^{3+3α}) → 0\n", 0) == 0);

  r = call({"degree", "--map", "whitehead_exchange_homotopy", "--at", "1/4,3/4"});
  CHECK(r.out.rfind("degree -1\n", 0) == 0);

  r = call({"tensor", "--expr", "KMW(2) (x) KMW(3)"});
  CHECK(r.out == "KMW(5)\n");

  r = call({"facts", "--key", "pi_{4+6a}(S^{3+3a})", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["result"]["value"] == "0");

  r = call({"ehp", "report", "-p", "3", "-q", "1"});
  CHECK(r.out == "rank 0, signature 2\n");

  r = call({"gw", "--field", "F5", "--expr", "<2> + <2>", "--equal", "2"});
  CHECK(r.out.find("equal: true") != std::string::npos);

  r = call({"james", "--space", "S1", "-n", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["quotient_is_smash_power"] == true);

  r = call({"kmw", "--field", "F5", "--expr", "eta*[2]"});
  CHECK(r.code == 0);
}

TEST_CASE("exit codes") {
  auto r = call({"ehp", "hp", "-p", "1", "-q", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("hypothesis") != std::string::npos);

  r = call({"--format", "json", "ehp", "sequence", "--space", "S[1+2a]"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.err)["error"] == "hypothesis");

  CHECK(call({"gw", "--expr", "<1"}).code == 2);
  CHECK(call({"homology", "--space", "S1 +"}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"homology"}).code == 2);
  CHECK(call({"degree", "--at", "1/2,1/2"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--format", "json", "james", "--space", "S1+S1", "-n", "2"};
  CHECK(call(args).out == call(args).out);
}
