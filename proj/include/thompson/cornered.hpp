#pragma once

#include "thompson/plmap.hpp"
#include "thompson/sigma.hpp"

namespace thompson {

/// A single-bump map whose nodes all lie in one fundamental domain:
/// in (x, l(x)) when increasing, in (l(x), x) when decreasing.
struct CorneredFunction {
  PLMap map;
  int sign = 1;
  Rational witness_point;
};

/// True iff g (increasing on its whole domain) is cornered.
bool is_cornered(const PLMap& g);

/// The least anchored rotation under the order "compare values at the first
/// position where the two functions differ" (absent positions count as 1).
FiniteFunction minimum_rotation(const FiniteFunction& c);

/// The increasing cornered map on [a,b] with initial slope c.period whose
/// finite function is c. Throws DomainError when no such map exists.
CorneredFunction cornered_from_ff(const FiniteFunction& c, const Rational& a, const Rational& b);

/// Affine on [a,x] and [x,b], fixing a and b, with slope ratio r at x.
PLMap elementary_map(const Rational& a, const Rational& b, const Rational& x, const Rational& r);

/// Initial slope of the elementary map at the last node of cornered_from_ff(c, a, b),
/// with the slope ratio found there.
Rational zeta_of(const FiniteFunction& c, const Rational& a, const Rational& b);

/// Conjugator onto the minimum cornered function of a bump.
struct CorneredConjugacy {
  /// k with k f k⁻¹ = l on [lo, hi].
  PLMap conjugator;
  /// The minimum cornered function, decreasing for decreasing bumps.
  PLMap cornered;
  /// The increasing minimum cornered function (l or l⁻¹).
  PLMap cornered_increasing;
};

/// Builds k by repeated elementary conjugations (move the last node back
/// until cornered, then cycle cornered forms until minimum). Verified exactly.
CorneredConjugacy conjugator_to_min_cornered(const Bump& bump);

/// The increasing minimum cornered function of a bump.
PLMap min_cornered_increasing(const Bump& bump);

/// Initial and final slopes of one conjugator onto the minimum cornered function.
struct AlphaBeta {
  Rational alpha;
  Rational beta;
};

/// Closed-form α (elementary-slope product times (q - a)/(p - a)); β is the
/// final slope of the conjugator with that same initial slope.
AlphaBeta alpha_beta(const Bump& bump);

/// Final slope of the unique conjugator k (k g k⁻¹ = l, both increasing on the
/// same interval) whose initial slope is alpha.
Rational final_slope_of_conjugator(const PLMap& g, const PLMap& l, const Rational& alpha);

/// The unique conjugator k with k g k⁻¹ = l and initial slope alpha, built
/// from k = l^N ∘ (affine) ∘ g^{-N} near the left end. Verified exactly.
PLMap conjugator_with_initial_slope(const PLMap& g, const PLMap& l, const Rational& alpha);

}  // namespace thompson
