#pragma once

#include <vector>

#include "thompson/plmap.hpp"
#include "thompson/rational.hpp"

namespace thompson {

/// A bump domain (lo, hi) of a map f: f fixes lo and hi and moves every
/// point in between in the direction of `sign`.
struct Bump {
  Rational lo;
  Rational hi;
  int sign = 0;
  /// f restricted to [lo, hi].
  PLMap restriction;

  Rational width() const { return hi - lo; }
  /// The representative that pushes points up: f itself or its inverse.
  PLMap increasing() const { return sign > 0 ? restriction : restriction.inverse(); }
};

/// Every bump of f, left to right.
std::vector<Bump> bumps(const PLMap& f, const FixedStructure& fs);
std::vector<Bump> bumps(const PLMap& f);

/// Consecutive bumps grouped into chains: two bumps share a chain iff they
/// meet at a non-dyadic fixed point.
std::vector<std::vector<Bump>> bump_chains(const PLMap& f, const FixedStructure& fs);
std::vector<std::vector<Bump>> bump_chains(const PLMap& f);

struct FFPoint {
  /// Multiplicative coordinate in [1, period): Λ^s for s in [0,1).
  Rational position;
  Rational value;
  friend bool operator==(const FFPoint&, const FFPoint&) = default;
  friend auto operator<=>(const FFPoint& a, const FFPoint& b) {
    if (auto c = a.position <=> b.position; c != 0) return c;
    return a.value <=> b.value;
  }
};

/// Orbit-collapsed node data of a bump: a function on the circle [0,1) that
/// is 1 away from finitely many points. Positions are stored multiplicatively
/// (Λ^s), so they stay rational. The first point always sits at position 1.
struct FiniteFunction {
  Rational period;
  std::vector<FFPoint> points;

  /// Re-anchors at point k: positions divide by q_k, wrapped ones gain a factor Λ.
  FiniteFunction rotated(std::size_t k) const;
  /// Lexicographically least rotation; equal classes have equal canonical forms.
  FiniteFunction canonical() const;
  /// Product of all values.
  Rational value_product() const;

  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;
};

/// ψ together with the point it is anchored at.
struct AnchoredFF {
  FiniteFunction psi;
  /// The point of the anchor orbit in (lo, first node], where the bump is
  /// scaling by its initial slope.
  Rational anchor_point;
};

/// ψ of a map with a single increasing bump on its whole domain, anchored at
/// the orbit of its least node with non-trivial orbit product.
AnchoredFF anchored_finite_function(const PLMap& g);

/// The anchored finite function ψ of a bump (of f⁻¹ for decreasing bumps).
FiniteFunction finite_function_of_bump(const Bump& bump);
inline FiniteFunction finite_function_of_increasing(const PLMap& g) { return anchored_finite_function(g).psi; }

bool ff_equivalent(const FiniteFunction& a, const FiniteFunction& b);

/// Largest p such that the class is invariant under translation by 1/p.
long ff_max_symmetry(const FiniteFunction& c);

struct SigmaInvariant {
  std::vector<int> sign_seq;
  std::vector<Rational> slopes;
  /// Canonical forms.
  std::vector<FiniteFunction> classes;

  friend bool operator==(const SigmaInvariant&, const SigmaInvariant&) = default;
};

SigmaInvariant sigma_of(const PLMap& f);
inline SigmaInvariant sigma_of(const FElement& f) { return sigma_of(f.map()); }

enum class SigmaMismatch { none, sigma1, sigma2, sigma3 };

/// The first component on which two invariants differ.
SigmaMismatch sigma_compare(const SigmaInvariant& a, const SigmaInvariant& b);

inline bool sigma_equal(const SigmaInvariant& a, const SigmaInvariant& b) {
  return sigma_compare(a, b) == SigmaMismatch::none;
}
bool sigma_equal(const FElement& f, const FElement& g);

}  // namespace thompson
