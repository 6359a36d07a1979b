#pragma once

#include <optional>
#include <vector>

#include "thompson/plmap.hpp"
#include "thompson/sigma.hpp"

namespace thompson {

/// The unique p-th root of f on a bump, as a map of [lo, hi].
/// Requires p to divide the max symmetry order of the bump's class.
PLMap pl_root_of_bump(const Bump& bump, long p);

/// Generator f̂ of the bump's centralizer in PL⁺(lo, hi), oriented so that
/// f̂^p = f for p the max symmetry order.
PLMap centralizer_generator(const Bump& bump);

/// True iff f has a p-th root in F. f must not be the identity.
bool root_in_F(const FElement& f, long p);

/// The p-th root of f in F, if any. f must not be the identity.
std::optional<FElement> root_extract(const FElement& f, long p);

/// g with g^power = f generating the group of roots of f.
struct RootGenerator {
  FElement generator;
  long power = 1;
};

RootGenerator r_generator(const FElement& f);

/// C_F(f) ≅ F^fixed_components × ℤ^chains.
struct CentralizerStructure {
  std::size_t fixed_components = 0;
  std::size_t chains = 0;
  std::vector<SignedInterval> fixed_intervals;
  /// One generator per bump chain, the identity off that chain.
  std::vector<FElement> chain_generators;
};

CentralizerStructure centralizer_structure(const FElement& f);

}  // namespace thompson
