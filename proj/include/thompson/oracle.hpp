#pragma once

// Brute-force ground truth over short words in the standard generators.
// Test support: not part of the C API surface except through the oracle
// entry points used by the CLI.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "thompson/plmap.hpp"

namespace thompson::oracle {

struct OracleConfig {
  /// Largest word length any oracle call accepts.
  int max_len_limit = 8;
  /// Worker threads for searches; results do not depend on this.
  unsigned threads = 1;
};

/// Default config, with the limit overridden by THOMPSON_ORACLE_MAX_LEN when set.
OracleConfig default_config();

struct WordElement {
  std::vector<Generator> word;
  FElement element;
};

/// Every element of word length <= max_len, once, with a shortest word.
/// Order: by length, then by generator order x0, x0^-1, x1, x1^-1 of the
/// extending letter over the previous layer.
std::vector<WordElement> enumerate_elements(int max_len, const OracleConfig& cfg = default_config());

/// First h in enumeration order with h ∘ f = g ∘ h.
std::optional<FElement> brute_force_conjugator(const FElement& f, const FElement& g, int max_len,
                                               const OracleConfig& cfg = default_config());

/// First r in enumeration order with r^p = f.
std::optional<FElement> brute_force_root(const FElement& f, long p, int max_len,
                                         const OracleConfig& cfg = default_config());

/// All (i, j) such that some h of length <= max_len has h e_i h⁻¹ = e_j.
/// Equivalent to calling brute_force_conjugator on every pair, computed by
/// conjugating each element by the whole ball once.
std::set<std::pair<std::size_t, std::size_t>> brute_force_conjugate_pairs(const std::vector<FElement>& elements,
                                                                          int max_len,
                                                                          const OracleConfig& cfg = default_config());

/// Freely reduced random word of exactly `length` letters; deterministic in seed.
std::vector<Generator> random_word(std::uint64_t seed, int length);

/// Hash of a map's breakpoint list.
std::size_t hash_map(const PLMap& f);

}  // namespace thompson::oracle
