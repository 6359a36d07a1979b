#include <doctest.h>

#include <cstdlib>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "thompson/errors.hpp"
#include "thompson/oracle.hpp"

using namespace thompson;
using namespace thompson::oracle;

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_elements(0).size() == 1);
  CHECK(enumerate_elements(1).size() == 5);
  // Regression numbers recorded from the first run.
  CHECK(enumerate_elements(2).size() == 17);
  CHECK(enumerate_elements(6).size() == 1381);
}

TEST_CASE("enumeration is duplicate free and words evaluate to their elements") {
  const auto ball = enumerate_elements(5);
  std::set<std::string> seen;
  for (const auto& we : ball) {
    std::string key;
    for (const Point& p : we.element.map().points()) key += p.x.to_string() + "," + p.y.to_string() + ";";
    CHECK(seen.insert(key).second);
    CHECK(word_to_element(we.word) == we.element);
  }
  for (std::size_t i = 1; i < ball.size(); ++i) CHECK(ball[i - 1].word.size() <= ball[i].word.size());
}

TEST_CASE("ball equals the image of all reduced words") {
  const Generator letters[] = {Generator::x0, Generator::x0_inv, Generator::x1, Generator::x1_inv};
  std::set<std::string> images;
  std::vector<std::vector<Generator>> layer{{}};
  for (int len = 0; len <= 6; ++len) {
    std::vector<std::vector<Generator>> next;
    for (const auto& word : layer) {
      std::string key;
      const FElement e = word_to_element(word);
      for (const Point& p : e.map().points()) key += p.x.to_string() + "," + p.y.to_string() + ";";
      images.insert(key);
      for (Generator g : letters) {
        if (!word.empty() && word.back() == inverse(g)) continue;
        next.push_back(word);
        next.back().push_back(g);
      }
    }
    layer = std::move(next);
  }
  CHECK(images.size() == enumerate_elements(6).size());
}

TEST_CASE("bound is enforced") {
  OracleConfig cfg;
  cfg.max_len_limit = 4;
  CHECK_THROWS_AS(enumerate_elements(5, cfg), UsageError);
  CHECK_THROWS_AS(enumerate_elements(-1, cfg), UsageError);
}

TEST_CASE("brute force searches") {
  const FElement x0 = fixtures::fx0();
  CHECK(brute_force_conjugator(x0, x0, 3) == FElement::identity());
  CHECK_FALSE(brute_force_conjugator(x0, fixtures::fx1(), 5).has_value());
  const FElement h0 = word_to_element(parse_word("x1 x0^-1"));
  const FElement g = compose(h0, compose(x0, inverse(h0)));
  auto h = brute_force_conjugator(x0, g, 2);
  REQUIRE(h.has_value());
  CHECK(compose(*h, x0) == compose(g, *h));
  CHECK(brute_force_root(power(x0, 2), 2, 2) == x0);
  CHECK(brute_force_root(FElement::identity(), 2, 0) == FElement::identity());
  CHECK_FALSE(brute_force_root(x0, 2, 5).has_value());
}

TEST_CASE("results do not depend on the thread count") {
  OracleConfig one;
  OracleConfig many;
  many.threads = 4;
  const FElement f = word_to_element(parse_word("x1 x0"));
  const FElement h0 = word_to_element(parse_word("x0^-1 x1^-1 x0"));
  const FElement g = compose(h0, compose(f, inverse(h0)));
  CHECK(brute_force_conjugator(f, g, 5, one) == brute_force_conjugator(f, g, 5, many));
  std::vector<FElement> elems;
  for (const auto& we : enumerate_elements(2)) elems.push_back(we.element);
  CHECK(brute_force_conjugate_pairs(elems, 3, one) == brute_force_conjugate_pairs(elems, 3, many));
}

TEST_CASE("conjugate pairs agree with pairwise search") {
  std::vector<FElement> elems;
  for (const auto& we : enumerate_elements(2)) elems.push_back(we.element);
  const auto pairs = brute_force_conjugate_pairs(elems, 2);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      // h e_i h⁻¹ = e_j  ⇔  h ∘ e_i = e_j ∘ h.
      CHECK(pairs.contains({i, j}) == brute_force_conjugator(elems[i], elems[j], 2).has_value());
    }
  }
}

TEST_CASE("random words are reduced and reproducible") {
  const auto a = random_word(99, 20);
  CHECK(a.size() == 20);
  CHECK(a == random_word(99, 20));
  CHECK(a != random_word(100, 20));
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] != inverse(a[i - 1]));
}
