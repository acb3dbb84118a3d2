#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "schreier/io.hpp"

using namespace schreier;
using fixtures::two_chain;

TEST_CASE("monoid documents round trip") {
  auto m = fixtures::sym3();
  auto j = monoid_to_json(m);
  auto back = monoid_from_json(j);
  CHECK(back == m);
  CHECK(back.name == "S3");
  // canonical re-emission is byte identical
  std::string once = canonical_dump(j);
  std::string twice = canonical_dump(monoid_to_json(monoid_from_json(
      json::parse(once))));
  CHECK(once == twice);
}

TEST_CASE("monoid documents are validated") {
  CHECK_THROWS_AS(monoid_from_json(json::parse(R"({"order":2})")), ParseError);
  CHECK_THROWS_AS(
      monoid_from_json(json::parse(R"({"order":2,"table":[[0,1],[1,0]],"x":1})")),
      ParseError);
  CHECK_THROWS_AS(
      monoid_from_json(json::parse(R"({"order":2,"table":[[0,7],[1,0]]})")),
      ParseError);
  // a broken table surfaces the algebra error with its witness
  try {
    monoid_from_json(json::parse(R"({"order":2,"table":[[1,1],[1,0]]})"));
    FAIL("expected an error");
  } catch (const AlgebraError& e) {
    CHECK(e.code == Err::NoIdentityAtZero);
  }
}

TEST_CASE("extension documents") {
  auto e = product_extension(cyclic_group(2), two_chain());
  auto j = extension_to_json(e);
  auto back = extension_from_json(j);
  CHECK(back == e);

  // k that is not a homomorphism is rejected with a location
  auto bad = j;
  bad["k"] = std::vector<int>{0, 1};
  try {
    extension_from_json(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& p) {
    CHECK(p.location == "$.k");
  }
}

TEST_CASE("schreier data emission") {
  auto e = product_extension(cyclic_group(2), two_chain());
  auto j = schreier_data_to_json(e.schreier());
  CHECK(j["base"]["0"] == 0);
  CHECK(j["q"].size() == 4);
  CHECK(j["reps"]["1"] == std::vector<int>{1, 3});
}

TEST_CASE("semimodule documents") {
  auto s = make_semimodule(cyclic_group(2), cyclic_group(3),
                           {{0, 1, 2}, {0, 2, 1}});
  auto back = semimodule_from_json(semimodule_to_json(s));
  CHECK(back == s);

  // an A3 violation names the offending triple
  auto j = semimodule_to_json(s);
  j["act"] = std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 2}};
  try {
    semimodule_from_json(j);
    FAIL("expected AlgebraError");
  } catch (const AlgebraError& e) {
    CHECK(e.code == Err::AxiomViolation);
    CHECK(e.witness.size() == 3);
  }
}
