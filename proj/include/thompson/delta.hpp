#pragma once

#include <optional>
#include <vector>

#include "thompson/plmap.hpp"
#include "thompson/rational.hpp"
#include "thompson/sigma.hpp"

namespace thompson {

/// Initial and final slopes of the generator f̂ of a bump's centralizer.
struct LambdaMu {
  Pow2Exp lambda;
  Pow2Exp mu;
  /// Max symmetry order p of the bump's finite function (f̂^p = f).
  long order = 1;
};

LambdaMu lambda_mu(const Bump& bump);

/// Δ data of one bump chain.
struct ChainDelta {
  /// e_1 = α_1/w_1, e_i = (α_i/w_i)(w_{i-1}/β_{i-1}).
  std::vector<Rational> entries;
  std::vector<Pow2Exp> lambdas;
  std::vector<Pow2Exp> mus;

  std::size_t size() const { return entries.size(); }
};

/// One class per bump chain, left to right.
struct DeltaInvariant {
  std::vector<ChainDelta> chains;
};

ChainDelta chain_delta(const std::vector<Bump>& chain);
DeltaInvariant delta_of(const PLMap& f);
inline DeltaInvariant delta_of(const FElement& f) { return delta_of(f.map()); }

/// Integers with 2^m x_1 = λ_1^{n_1} y_1 and μ_{i-1}^{n_{i-1}} x_i = λ_i^{n_i} y_i.
struct DeltaWitness {
  long m = 0;
  std::vector<long> n;
};

/// Solves the exponent chain for x ~ y. The λ/μ data must agree (UsageError otherwise).
std::optional<DeltaWitness> delta_equivalent(const ChainDelta& x, const ChainDelta& y);

/// True iff the witness satisfies every defining equation.
bool delta_witness_holds(const ChainDelta& x, const ChainDelta& y, const DeltaWitness& w);

bool delta_equal(const DeltaInvariant& a, const DeltaInvariant& b);

}  // namespace thompson
