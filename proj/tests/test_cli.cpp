#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "cli_driver.hpp"
#include "helly/exact/numbers.hpp"

using helly::cli::run_verb;
using nlohmann::json;

namespace {

json out_of(const helly::cli::RunResult& r) { return json::parse(r.output); }

}  // namespace

TEST_CASE("kappa verb") {
  auto r = run_verb("kappa", R"({"invariant_factors":[2,4,8]})");
  CHECK(r.exit_code == 0);
  CHECK(out_of(r)["kappa"] == 4);
  CHECK(out_of(r)["min_generators"] == 3);

  // trivial group is a domain error
  r = run_verb("kappa", R"({"invariant_factors":[]})");
  CHECK(r.exit_code == 1);
  CHECK(out_of(r).contains("error"));

  r = run_verb("kappa", "not json");
  CHECK(r.exit_code == 2);

  // malformed rationals are rejected, not crashed on
  r = run_verb("sl2-closed", R"({"components":[{"coeff":"1/0","roots":[]}]})");
  CHECK(r.exit_code == 2);
}

TEST_CASE("intersect verb emits certificates for empty systems") {
  auto r = run_verb("intersect", R"({
    "invariant_factors":[2],
    "cosets":[{"rep":[0],"gens":[]},{"rep":[1],"gens":[]}]})");
  CHECK(r.exit_code == 0);
  json j = out_of(r);
  CHECK(j["empty"] == true);
  CHECK(j["certificate"] == json::array({0, 1}));

  r = run_verb("intersect", R"({
    "invariant_factors":[12],
    "cosets":[{"rep":[1],"gens":[[3]]},{"rep":[2],"gens":[[4]]}]})");
  CHECK(r.exit_code == 0);
  j = out_of(r);
  CHECK(j["empty"] == false);
  CHECK(j["coset"]["rep"] == json::array({10}));
}

TEST_CASE("witness verb output re-parses through intersect") {
  auto r = run_verb("witness", R"({"p":2,"d":2})");
  REQUIRE(r.exit_code == 0);
  auto again = run_verb("intersect", r.output);
  CHECK(again.exit_code == 0);
  json j = out_of(again);
  CHECK(j["empty"] == true);
  CHECK(j["certificate"].size() == 3);
}

TEST_CASE("brute-kappa verb respects the order bound") {
  auto r = run_verb("brute-kappa", R"({"invariant_factors":[2,2]})");
  CHECK(r.exit_code == 0);
  CHECK(out_of(r)["kappa"] == 3);

  helly::cli::Options opts;
  opts.max_order = 8;
  r = run_verb("brute-kappa", R"({"invariant_factors":[3,9]})", opts);
  CHECK(r.exit_code == 3);
}

TEST_CASE("progressions verb") {
  auto r = run_verb("progressions",
                    R"({"progressions":[{"a":1,"m":3},{"a":2,"m":4}]})");
  CHECK(r.exit_code == 0);
  json j = out_of(r);
  CHECK(j["empty"] == false);
  CHECK(j["a"] == "10");
  CHECK(j["m"] == "12");

  r = run_verb("progressions",
               R"({"progressions":[{"a":0,"m":2},{"a":1,"m":2},{"a":0,"m":3}]})");
  CHECK(r.exit_code == 0);
  j = out_of(r);
  CHECK(j["empty"] == true);
  CHECK(j["certificate"] == json::array({0, 1}));
}

TEST_CASE("torus verbs") {
  auto r = run_verb("torus-check",
                    R"({"rank":2,"factors":[[[1,0]],[[-1,0]],[[0,1]],[[0,-1]]]})");
  CHECK(r.exit_code == 0);
  json j = out_of(r);
  CHECK(j["closed"] == true);
  CHECK(j["dim"] == 2);
  CHECK(j["combination"].size() == 4);

  r = run_verb("torus-select",
               R"({"rank":2,"factors":[[[1,0]],[[-1,0]],[[0,1]],[[0,-1]]]})");
  CHECK(r.exit_code == 0);
  j = out_of(r);
  CHECK(j["indices"] == json::array({0, 1, 2, 3}));

  r = run_verb("torus-select", R"({"rank":1,"factors":[[[1]]]})");
  CHECK(r.exit_code == 1);  // not closed: precondition violation
}

TEST_CASE("sl2 verbs") {
  const char* triple = R"({"components":[
    {"coeff":"1","roots":[{"p":1,"q":0,"mult":1},{"p":0,"q":1,"mult":1}]},
    {"coeff":"1","roots":[{"p":1,"q":0,"mult":1},{"p":1,"q":1,"mult":1}]},
    {"coeff":"1","roots":[{"p":0,"q":1,"mult":1},{"p":1,"q":1,"mult":1}]}]})";
  auto r = run_verb("sl2-closed", triple);
  CHECK(r.exit_code == 0);
  json j = out_of(r);
  CHECK(j["closed"] == true);
  CHECK(j["dim"] == 3);

  r = run_verb("sl2-select", triple);
  CHECK(r.exit_code == 0);
  CHECK(out_of(r)["indices"] == json::array({0, 1, 2}));

  // zero components are stripped and reported
  r = run_verb("sl2-closed", R"({"components":[
    {"coeff":"0","roots":[{"p":1,"q":0,"mult":2}]},
    {"coeff":"1","roots":[{"p":1,"q":0,"mult":1},{"p":0,"q":1,"mult":1}]}]})");
  CHECK(r.exit_code == 0);
  j = out_of(r);
  CHECK(j["stripped"] == json::array({0}));
  CHECK(j["closed"] == true);

  // det_twist is rejected on the sl2 side
  r = run_verb("sl2-closed", R"({"components":[
    {"coeff":"1","roots":[{"p":1,"q":0,"mult":1}],"det_twist":1}]})");
  CHECK(r.exit_code == 2);

  // non-closed orbits carry a destabilizing subgroup certificate
  r = run_verb("sl2-closed",
               R"({"components":[{"coeff":"1","roots":[{"p":1,"q":0,"mult":2}]}]})");
  CHECK(r.exit_code == 0);
  j = out_of(r);
  CHECK(j["closed"] == false);
  CHECK(j["escape"]["eigenline"]["p"] == 1);
  CHECK(j["escape"]["eigenline"]["q"] == 0);
  CHECK(j["escape"]["slope"] == "0");
}

TEST_CASE("gl2 verbs") {
  const char* five = R"({"components":[
    {"coeff":"1","roots":[],"det_twist":1},
    {"coeff":"1","roots":[],"det_twist":-1},
    {"coeff":"1","roots":[{"p":1,"q":0,"mult":1},{"p":0,"q":1,"mult":1}],"det_twist":1},
    {"coeff":"1","roots":[{"p":1,"q":0,"mult":1},{"p":1,"q":1,"mult":1}],"det_twist":1},
    {"coeff":"1","roots":[{"p":0,"q":1,"mult":1},{"p":1,"q":1,"mult":1}],"det_twist":1}]})";
  auto r = run_verb("gl2-closed", five);
  CHECK(r.exit_code == 0);
  json j = out_of(r);
  CHECK(j["closed"] == true);
  CHECK(j["dim"] == 4);

  r = run_verb("gl2-select", five);
  CHECK(r.exit_code == 0);
  CHECK(out_of(r)["indices"] == json::array({0, 1, 2, 3, 4}));

  r = run_verb("oracle", std::string(R"({"group":"GL2",)") +
                             std::string(five).substr(1));
  CHECK(r.exit_code == 0);
  CHECK(out_of(r)["closed"] == true);
}

TEST_CASE("separate verb") {
  // Z/4 acting on two copies of the index-two coset space
  const char* input = R"({
    "table":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
    "stabilizers":[[0,2],[0,2]],
    "x":[0,0],"y":[1,0]})";
  auto r = run_verb("separate", input);
  CHECK(r.exit_code == 0);
  json j = out_of(r);
  CHECK(j["same_orbit"] == false);
  CHECK(j["separating"] == json::array({0, 1}));
}

TEST_CASE("determinism: identical input gives identical bytes") {
  const char* in = R"({"invariant_factors":[2,4]})";
  auto a = run_verb("kappa", in);
  auto b = run_verb("kappa", in);
  CHECK(a.output == b.output);
}

TEST_CASE("rationals round-trip losslessly as p/q strings") {
  auto r = run_verb("torus-check",
                    R"({"rank":1,"factors":[[[2]],[[-1]]]})");
  REQUIRE(r.exit_code == 0);
  json j = out_of(r);
  REQUIRE(j["closed"] == true);
  helly::exact::Rat sum(0);
  helly::exact::Rat weighted(0);
  std::vector<long> ws = {2, -1};
  for (std::size_t i = 0; i < j["combination"].size(); ++i) {
    helly::exact::Rat c = helly::exact::rat_from_string(
        j["combination"][i].get<std::string>());
    CHECK(c > 0);
    sum += c;
    weighted += c * ws[i];
  }
  CHECK(sum == 1);
  CHECK(weighted == 0);
}
