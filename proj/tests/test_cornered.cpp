#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "thompson/cornered.hpp"
#include "thompson/errors.hpp"

using namespace thompson;
using fixtures::q;

namespace {

FiniteFunction ff(Rational period, std::vector<std::pair<Rational, Rational>> pts) {
  FiniteFunction c{std::move(period), {}};
  for (auto& [s, z] : pts) c.points.push_back({s, z});
  return c;
}

// First node of the cornered map on (0,1) found by solving continuity at 1
// directly: nodes at pos_i * u, slopes λ z_0 ... z_{i-1}; the image of 1 is
// affine in u.
Rational first_node_by_continuity(const FiniteFunction& c) {
  auto image_of_one = [&](const Rational& u) {
    Rational y = 0;
    Rational prev = 0;
    Rational slope = c.period;
    for (const auto& p : c.points) {
      const Rational node = p.position * u;
      y += slope * (node - prev);
      prev = node;
      slope *= p.value;
    }
    return y + slope * (Rational(1) - prev);
  };
  const Rational y0 = image_of_one(0);
  const Rational y1 = image_of_one(1);
  return (Rational(1) - y0) / (y1 - y0);
}

}  // namespace

TEST_CASE("first node formula") {
  CHECK(cornered_from_ff(ff(q(2), {{q(1), q(1, 8)}}), q(0), q(1)).map.nodes()[0].x == q(3, 7));
  CHECK(cornered_from_ff(ff(q(2), {{q(1), q(1, 4)}}), q(0), q(1)).map.nodes()[0].x == q(1, 3));
  const PLMap l = cornered_from_ff(ff(q(2), {{q(1), q(1, 8)}}), q(0), q(1)).map;
  CHECK(l.initial_slope() == q(2));
  CHECK(l.final_slope() == q(1, 4));
}

TEST_CASE("first node agrees with an independent continuity solve") {
  const std::vector<FiniteFunction> cases{
      ff(q(2), {{q(1), q(1, 8)}}),
      ff(q(4), {{q(1), q(1, 4)}, {q(2), q(1, 4)}}),
      ff(q(8), {{q(1), q(1, 2)}, {q(3, 2), q(1, 4)}, {q(5), q(1, 8)}}),
      ff(q(4), {{q(1), q(2)}, {q(3), q(1, 32)}}),
  };
  for (const auto& c : cases) {
    const PLMap l = cornered_from_ff(c, q(0), q(1)).map;
    CHECK(l.nodes()[0].x == first_node_by_continuity(c));
    CHECK(finite_function_of_increasing(l) == c);
    CHECK(is_cornered(l));
  }
}

TEST_CASE("cornered_from_ff reproduces l2 and l-") {
  CHECK(cornered_from_ff(ff(q(4), {{q(1), q(1, 4)}, {q(2), q(1, 4)}}), q(0), q(1)).map == fixtures::l2());
  CHECK(cornered_from_ff(ff(q(2), {{q(1), q(1, 4)}}), q(0), q(1)).map == fixtures::l_minus());
  CHECK_THROWS_AS(cornered_from_ff(ff(q(2), {{q(1), q(1)}}), q(0), q(1)), DomainError);
}

TEST_CASE("elementary maps") {
  const PLMap e = elementary_map(q(0), q(1), q(1, 2), q(1, 2));
  CHECK(e.initial_slope() == q(4, 3));
  CHECK(e == fixtures::map({{q(0), q(0)}, {q(1, 2), q(2, 3)}, {q(1), q(1)}}));
  CHECK(elementary_map(q(0), q(1), q(3, 7), q(1, 8)).initial_slope() == q(2));
  CHECK(elementary_map(q(0), q(1), q(1, 3), q(1)).is_identity());
  CHECK(elementary_map(q(1, 2), q(1), q(3, 4), q(4)).slope_ratio(q(3, 4)) == q(4));
}

TEST_CASE("zeta") {
  CHECK(zeta_of(ff(q(2), {{q(1), q(1, 8)}}), q(0), q(1)) == q(2));
  CHECK(zeta_of(ff(q(4), {{q(1), q(1, 4)}, {q(2), q(1, 4)}}), q(0), q(1)) == q(2));
  // The closed form equals the initial slope of the elementary map at the last node.
  const FiniteFunction c = ff(q(8), {{q(1), q(1, 2)}, {q(3, 2), q(1, 4)}, {q(5), q(1, 8)}});
  const PLMap l = cornered_from_ff(c, q(0), q(1)).map;
  const Point last = l.nodes().back();
  CHECK(zeta_of(c, q(0), q(1)) == elementary_map(q(0), q(1), last.x, l.slope_ratio(last.x)).initial_slope());
}

TEST_CASE("minimum rotation") {
  CHECK(minimum_rotation(ff(q(4), {{q(1), q(1, 2)}, {q(2), q(1, 4)}})) ==
        ff(q(4), {{q(1), q(1, 4)}, {q(2), q(1, 2)}}));
  CHECK(minimum_rotation(ff(q(2), {{q(1), q(1, 4)}})) == ff(q(2), {{q(1), q(1, 4)}}));
  CHECK(minimum_rotation(ff(q(4), {{q(1), q(1, 4)}, {q(2), q(1, 4)}})) ==
        ff(q(4), {{q(1), q(1, 4)}, {q(2), q(1, 4)}}));
}

TEST_CASE("conjugator to the minimum cornered function") {
  const Bump b0 = bumps(fixtures::x0())[0];
  const CorneredConjugacy c0 = conjugator_to_min_cornered(b0);
  CHECK(c0.cornered == fixtures::l_minus().inverse());
  CHECK(c0.cornered_increasing == fixtures::l_minus());
  CHECK(c0.conjugator.initial_slope() == q(4, 3));
  CHECK(compose(c0.conjugator, b0.restriction) == compose(c0.cornered, c0.conjugator));

  const Bump already{q(0), q(1), 1, fixtures::l2()};
  CHECK(conjugator_to_min_cornered(already).conjugator.is_identity());

  const Bump b2 = bumps(power(fixtures::x0(), 2))[0];
  const CorneredConjugacy c2 = conjugator_to_min_cornered(b2);
  CHECK(c2.cornered_increasing == fixtures::l2());
  CHECK(compose(c2.conjugator, b2.restriction) == compose(c2.cornered, c2.conjugator));
}

TEST_CASE("alpha and beta") {
  CHECK(alpha_beta(bumps(fixtures::x0())[0]).alpha == q(4, 3));
  CHECK(alpha_beta(bumps(fixtures::x1())[0]).alpha == q(4, 3));
  CHECK(alpha_beta(Bump{q(0), q(1), 1, fixtures::l2()}).alpha == q(1));
  CHECK(alpha_beta(Bump{q(0), q(1), 1, fixtures::l2()}).beta == q(1));
}

TEST_CASE("alpha and beta are the end slopes of one conjugator") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const PLMap f = fixtures::random_element(rng, 1, 10).map();
    for (const Bump& b : bumps(f)) {
      const AlphaBeta ab = alpha_beta(b);
      const PLMap g = b.increasing();
      const PLMap l = min_cornered_increasing(b);
      const PLMap k = conjugator_with_initial_slope(g, l, ab.alpha);
      CHECK(compose(k, g) == compose(l, k));
      CHECK(k.initial_slope() == ab.alpha);
      CHECK(k.final_slope() == ab.beta);
      // The elementary iteration gives another conjugator; the two differ by
      // a centralizer element, so their end slopes differ by λ̂^t and μ̂^t for
      // one common t.
      const PLMap k2 = conjugator_to_min_cornered(b).conjugator;
      CHECK(compose(k2, g) == compose(l, k2));
      const Rational ra = k2.initial_slope() / ab.alpha;
      const Rational rb = k2.final_slope() / ab.beta;
      const Rational lam = g.initial_slope();
      const Rational mu = g.final_slope();
      // With λ̂ = λ^{1/p}: ra = λ^{t/p}, rb = μ^{t/p}, so ra^{log μ} = rb^{log λ}.
      const long el = *pow2_exponent(lam);
      const long em = *pow2_exponent(mu);
      const auto xa = pow2_exponent(ra);
      const auto xb = pow2_exponent(rb);
      REQUIRE(xa.has_value());
      REQUIRE(xb.has_value());
      CHECK(*xa * em == *xb * el);
      ++checked;
    }
  }
  CHECK(checked > 50);
}
