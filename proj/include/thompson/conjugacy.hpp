#pragma once

#include <optional>
#include <string_view>

#include "thompson/plmap.hpp"
#include "thompson/sigma.hpp"

namespace thompson {

/// Which invariant layer first separates two elements.
enum class Verdict { conjugate, sigma1, sigma2, sigma3, chain_structure, delta };

std::string_view verdict_name(Verdict v);

/// Conjugacy in PL⁺(0,1): Σ_f = Σ_g.
bool conjugate_in_PL(const FElement& f, const FElement& g);

/// Full decision with the first failing layer.
Verdict conjugacy_verdict(const FElement& f, const FElement& g);

/// Conjugacy in F: Σ_f = Σ_g and Δ_f = Δ_g.
inline bool conjugate_in_F(const FElement& f, const FElement& g) {
  return conjugacy_verdict(f, g) == Verdict::conjugate;
}

/// PL map [src_lo, src_hi] -> [dst_lo, dst_hi] with dyadic nodes and
/// power-of-2 slopes. All endpoints must be dyadic.
PLMap staircase_map(const Rational& src_lo, const Rational& src_hi, const Rational& dst_lo, const Rational& dst_hi);

/// h with h f| h⁻¹ = g| for Σ-equivalent bumps, through the minimum cornered functions.
PLMap pl_bump_conjugator(const Bump& f_bump, const Bump& g_bump);

/// h ∈ F with h ∘ f = g ∘ h, or nullopt iff f and g are not conjugate in F.
std::optional<FElement> conjugator_witness(const FElement& f, const FElement& g);

}  // namespace thompson
