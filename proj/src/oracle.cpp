#include "thompson/oracle.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>

#include "thompson/errors.hpp"

namespace thompson::oracle {

namespace {

constexpr Generator kLetters[] = {Generator::x0, Generator::x0_inv, Generator::x1, Generator::x1_inv};

struct MapHash {
  std::size_t operator()(const PLMap& f) const { return hash_map(f); }
};

void check_bound(int max_len, const OracleConfig& cfg) {
  if (max_len < 0 || max_len > cfg.max_len_limit) {
    throw UsageError("word length bound " + std::to_string(max_len) + " outside [0, " +
                     std::to_string(cfg.max_len_limit) + "]");
  }
}

// Index of the first element satisfying pred, scanning in parallel stripes.
template <typename Pred>
std::optional<std::size_t> first_match(std::size_t count, unsigned threads, Pred pred) {
  threads = std::max(1u, threads);
  std::atomic<std::size_t> best{count};
  auto work = [&](unsigned stripe) {
    for (std::size_t i = stripe; i < count; i += threads) {
      if (i >= best.load(std::memory_order_relaxed)) return;
      if (pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  if (best.load() == count) return std::nullopt;
  return best.load();
}

}  // namespace

std::size_t hash_map(const PLMap& f) {
  std::size_t h = 0;
  for (const Point& p : f.points()) {
    h = h * 1000003u ^ p.x.hash();
    h = h * 1000003u ^ p.y.hash();
  }
  return h;
}

OracleConfig default_config() {
  OracleConfig cfg;
  if (const char* env = std::getenv("THOMPSON_ORACLE_MAX_LEN")) {
    try {
      cfg.max_len_limit = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("THOMPSON_ORACLE_MAX_LEN is not an integer: ") + env);
    }
  }
  return cfg;
}

std::vector<WordElement> enumerate_elements(int max_len, const OracleConfig& cfg) {
  check_bound(max_len, cfg);
  std::vector<WordElement> out;
  std::unordered_map<PLMap, std::size_t, MapHash> seen;
  out.push_back({{}, FElement::identity()});
  seen.emplace(out.back().element.map(), 0);
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Generator g : kLetters) {
        if (!out[i].word.empty() && out[i].word.back() == inverse(g)) continue;
        PLMap m = compose(out[i].element.map(), generator(g).map());
        if (seen.contains(m)) continue;
        std::vector<Generator> word = out[i].word;
        word.push_back(g);
        seen.emplace(m, out.size());
        out.push_back({std::move(word), FElement(std::move(m))});
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

std::optional<FElement> brute_force_conjugator(const FElement& f, const FElement& g, int max_len,
                                               const OracleConfig& cfg) {
  const auto ball = enumerate_elements(max_len, cfg);
  auto hit = first_match(ball.size(), cfg.threads, [&](std::size_t i) {
    const PLMap& h = ball[i].element.map();
    return compose(h, f.map()) == compose(g.map(), h);
  });
  if (!hit) return std::nullopt;
  return ball[*hit].element;
}

std::optional<FElement> brute_force_root(const FElement& f, long p, int max_len, const OracleConfig& cfg) {
  const auto ball = enumerate_elements(max_len, cfg);
  auto hit = first_match(ball.size(), cfg.threads,
                         [&](std::size_t i) { return power(ball[i].element.map(), p) == f.map(); });
  if (!hit) return std::nullopt;
  return ball[*hit].element;
}

std::set<std::pair<std::size_t, std::size_t>> brute_force_conjugate_pairs(const std::vector<FElement>& elements,
                                                                          int max_len, const OracleConfig& cfg) {
  const auto ball = enumerate_elements(max_len, cfg);
  std::unordered_map<PLMap, std::size_t, MapHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i].map(), i);

  const unsigned threads = std::max(1u, cfg.threads);
  std::vector<std::set<std::pair<std::size_t, std::size_t>>> partial(threads);
  auto work = [&](unsigned stripe) {
    for (std::size_t h = stripe; h < ball.size(); h += threads) {
      const PLMap& hm = ball[h].element.map();
      const PLMap h_inv = hm.inverse();
      for (std::size_t i = 0; i < elements.size(); ++i) {
        const PLMap conj = compose(hm, compose(elements[i].map(), h_inv));
        if (auto it = index.find(conj); it != index.end()) partial[stripe].emplace(i, it->second);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (auto& s : partial) out.merge(s);
  return out;
}

std::vector<Generator> random_word(std::uint64_t seed, int length) {
  if (length < 0) throw UsageError("word length must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<Generator> word;
  while (static_cast<int>(word.size()) < length) {
    // Raw modulo keeps the stream identical across standard libraries.
    Generator g = kLetters[rng() % 4];
    if (!word.empty() && word.back() == inverse(g)) continue;
    word.push_back(g);
  }
  return word;
}

}  // namespace thompson::oracle
