#pragma once

#include <random>
#include <vector>

#include "thompson/oracle.hpp"
#include "thompson/plmap.hpp"

namespace fixtures {

using thompson::PLMap;
using thompson::Point;
using thompson::Rational;

inline Rational q(long n, long d = 1) { return Rational(n, d); }

inline PLMap map(std::vector<std::pair<Rational, Rational>> pts) {
  std::vector<Point> out;
  for (auto& [x, y] : pts) out.push_back({x, y});
  return PLMap::from_points(std::move(out));
}

inline PLMap x0() { return map({{q(0), q(0)}, {q(1, 2), q(1, 4)}, {q(3, 4), q(1, 2)}, {q(1), q(1)}}); }
inline PLMap x1() {
  return map({{q(0), q(0)}, {q(1, 2), q(1, 2)}, {q(3, 4), q(5, 8)}, {q(7, 8), q(3, 4)}, {q(1), q(1)}});
}
inline PLMap w() {
  return map({{q(0), q(0)},
              {q(1, 8), q(1, 16)},
              {q(5, 16), q(1, 4)},
              {q(3, 8), q(1, 2)},
              {q(1, 2), q(3, 4)},
              {q(1), q(1)}});
}
inline PLMap l_minus() { return map({{q(0), q(0)}, {q(1, 3), q(2, 3)}, {q(1), q(1)}}); }
inline PLMap l2() { return map({{q(0), q(0)}, {q(1, 6), q(2, 3)}, {q(1, 3), q(5, 6)}, {q(1), q(1)}}); }

inline thompson::FElement fx0() { return thompson::FElement(x0()); }
inline thompson::FElement fx1() { return thompson::FElement(x1()); }
inline thompson::FElement fw() { return thompson::FElement(w()); }

/// Random element from a reduced word of length drawn uniformly in [lo, hi].
inline thompson::FElement random_element(std::mt19937_64& rng, int lo, int hi) {
  const int len = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  return thompson::word_to_element(thompson::oracle::random_word(rng(), len));
}

}  // namespace fixtures
