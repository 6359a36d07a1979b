#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "thompson/thompson.h"

namespace {

const char* kX0 = R"({"breakpoints":[["0/1","0/1"],["1/2","1/4"],["3/4","1/2"],["1/1","1/1"]]})";

std::string take(char* s) {
  std::string out = s ? s : "";
  tf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse, serialize, free") {
  tf_element* f = nullptr;
  REQUIRE(tf_element_parse(kX0, &f) == TF_OK);
  char* json = nullptr;
  REQUIRE(tf_element_to_json(f, &json) == TF_OK);
  CHECK(take(json) == std::string(kX0).substr(0, std::strlen(kX0)));
  tf_element_free(f);
}

TEST_CASE("error codes and messages") {
  tf_element* f = nullptr;
  CHECK(tf_element_parse("{", &f) == TF_ERR_PARSE);
  CHECK(f == nullptr);
  CHECK(std::strlen(tf_last_error()) > 0);
  CHECK(tf_element_parse(R"({"breakpoints":[["0/1","0/1"],["1/3","2/3"],["1/1","1/1"]]})", &f) ==
        TF_ERR_DOMAIN);
  CHECK(std::string(tf_last_error()).find("1/3") != std::string::npos);
  CHECK(tf_element_parse(nullptr, &f) == TF_ERR_USAGE);

  tf_element* id = nullptr;
  REQUIRE(tf_element_identity(&id) == TF_OK);
  tf_element* g = nullptr;
  long power = 0;
  CHECK(tf_root_generator(id, &g, &power) == TF_ERR_DOMAIN);
  tf_element_free(id);
  CHECK(tf_element_parse("word:x0", &f) == TF_OK);
  CHECK(std::string(tf_last_error()).empty());
  tf_element_free(f);
}

TEST_CASE("group operations and decisions") {
  tf_element *x0 = nullptr, *x1 = nullptr, *sq = nullptr, *r = nullptr, *inv = nullptr, *prod = nullptr;
  REQUIRE(tf_element_parse(kX0, &x0) == TF_OK);
  REQUIRE(tf_element_parse("word:x1", &x1) == TF_OK);
  REQUIRE(tf_power(x0, 2, &sq) == TF_OK);
  REQUIRE(tf_root(sq, 2, &r) == TF_OK);
  CHECK(tf_element_equal(r, x0) == 1);
  REQUIRE(tf_inverse(x0, &inv) == TF_OK);
  REQUIRE(tf_compose(x0, inv, &prod) == TF_OK);
  tf_element* id = nullptr;
  REQUIRE(tf_element_identity(&id) == TF_OK);
  CHECK(tf_element_equal(prod, id) == 1);

  char* value = nullptr;
  REQUIRE(tf_evaluate(x0, "1/2", &value) == TF_OK);
  CHECK(take(value) == "1/4");

  int conj = -1;
  char* reason = nullptr;
  REQUIRE(tf_conjugate(x0, x1, &conj, &reason) == TF_OK);
  CHECK(conj == 0);
  CHECK(take(reason) == "sigma1");
  REQUIRE(tf_conjugate(x0, x0, &conj, &reason) == TF_OK);
  CHECK(conj == 1);
  CHECK(reason == nullptr);

  tf_element* h = nullptr;
  REQUIRE(tf_conjugator(x0, x1, &h) == TF_OK);
  CHECK(h == nullptr);
  tf_element* none = nullptr;
  REQUIRE(tf_root(x0, 2, &none) == TF_OK);
  CHECK(none == nullptr);

  char* cent = nullptr;
  REQUIRE(tf_centralizer_json(x1, &cent) == TF_OK);
  CHECK(take(cent).find("\"fixed_components\":1") != std::string::npos);

  int in_f = -1;
  char* diag = nullptr;
  REQUIRE(tf_check(R"({"breakpoints":[["0/1","0/1"],["1/2","3/8"],["1/1","1/1"]]})", &in_f, &diag) == TF_OK);
  CHECK(in_f == 0);
  CHECK(take(diag).find("3/4") != std::string::npos);

  for (tf_element* e : {x0, x1, sq, r, inv, prod, id}) tf_element_free(e);
}

TEST_CASE("random elements and oracle") {
  char* word = nullptr;
  tf_element* e = nullptr;
  REQUIRE(tf_random_element(5, 6, &word, &e) == TF_OK);
  const std::string w = take(word);
  tf_element* again = nullptr;
  REQUIRE(tf_element_parse(("word:" + w).c_str(), &again) == TF_OK);
  CHECK(tf_element_equal(e, again) == 1);

  tf_element* h = nullptr;
  REQUIRE(tf_oracle_conjugator(e, e, 2, &h) == TF_OK);
  REQUIRE(h != nullptr);
  tf_element* huge = nullptr;
  CHECK(tf_oracle_conjugator(e, e, 1000, &huge) == TF_ERR_USAGE);
  for (tf_element* x : {e, again, h}) tf_element_free(x);
}
