#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "thompson/errors.hpp"
#include "thompson/serialize.hpp"

using namespace thompson;
using fixtures::q;

TEST_CASE("parse_element forms") {
  CHECK(parse_element(R"({"breakpoints":[["0/1","0/1"],["1/2","1/4"],["3/4","1/2"],["1/1","1/1"]]})") ==
        fixtures::fx0());
  CHECK(parse_element("word:") == FElement::identity());
  CHECK(parse_element("  word:x1 ") == fixtures::fx1());
  CHECK(parse_element(R"({"breakpoints":[["0","0"],["1","1"]]})") == FElement::identity());
}

TEST_CASE("parse_element errors") {
  CHECK_THROWS_AS(parse_element(R"({"breakpoints":[["0/1","0/1"],["1/3","2/3"],["1/1","1/1"]]})"),
                  DomainError);
  CHECK_THROWS_AS(parse_element("{"), ParseError);
  CHECK_THROWS_AS(parse_element(R"({"points":[]})"), ParseError);
  CHECK_THROWS_AS(parse_element(R"({"breakpoints":[[0,0],[1,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_element(R"({"breakpoints":[["0/1","0/1"],["1/2","1/2","1/2"],["1/1","1/1"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_element("word:x3"), ParseError);
}

TEST_CASE("element round trip") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const FElement f = fixtures::random_element(rng, 0, 14);
    CHECK(parse_element(to_json(f).dump()) == f);
  }
}

TEST_CASE("invariant JSON uses fraction strings") {
  const Json s = to_json(sigma_of(fixtures::fx0()));
  CHECK(s["sigma1"] == Json::array({-1}));
  CHECK(s["sigma2"] == Json::array({"1/2"}));
  CHECK(s["sigma3"][0]["period"] == "2/1");
  CHECK(s["sigma3"][0]["points"][0] == Json::array({"1/1", "1/4"}));
  const Json d = to_json(delta_of(fixtures::fx1()));
  CHECK(d["chains"][0]["entries"] == Json::array({"8/3"}));
  CHECK(d["chains"][0]["lambda_exponents"] == Json::array({"-1/1"}));
  const Json c = to_json(centralizer_structure(fixtures::fx1()));
  CHECK(c["fixed_components"] == 1);
  CHECK(c["fixed_intervals"][0] == Json::array({"0/1", "1/2"}));
}
