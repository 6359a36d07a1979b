#include "thompson/delta.hpp"

#include "thompson/cornered.hpp"
#include "thompson/errors.hpp"

namespace thompson {

LambdaMu lambda_mu(const Bump& bump) {
  const long p = ff_max_symmetry(finite_function_of_bump(bump));
  const Pow2Exp initial = Pow2Exp::of(bump.restriction.initial_slope());
  const Pow2Exp final = Pow2Exp::of(bump.restriction.final_slope());
  return {initial.root(p), final.root(p), p};
}

ChainDelta chain_delta(const std::vector<Bump>& chain) {
  ChainDelta d;
  Rational prev_width;
  Rational prev_beta;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Bump& bump = chain[i];
    const AlphaBeta ab = alpha_beta(bump);
    const Rational w = bump.width();
    Rational e = ab.alpha / w;
    if (i > 0) e *= prev_width / prev_beta;
    d.entries.push_back(std::move(e));
    const LambdaMu lm = lambda_mu(bump);
    d.lambdas.push_back(lm.lambda);
    d.mus.push_back(lm.mu);
    prev_width = w;
    prev_beta = ab.beta;
  }
  return d;
}

DeltaInvariant delta_of(const PLMap& f) {
  DeltaInvariant out;
  for (const auto& chain : bump_chains(f)) out.chains.push_back(chain_delta(chain));
  return out;
}

namespace {

// n_j = base_j + step_j * t over a single free integer t.
struct Family {
  std::vector<Integer> base;
  std::vector<Integer> step;

  // Restricts t so that D divides u t + v; false when impossible.
  bool impose(const Integer& u, const Integer& v, const Integer& d) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), d.get_mpz_t());
    if (u == 0) return v % d == 0;
    if (v % g != 0) return false;
    const Integer modulus = d / g;
    Integer t0(0);
    if (modulus != 1) {
      Integer u_red = u / g;
      Integer inv;
      Integer u_mod = u_red % modulus;
      if (u_mod < 0) u_mod += modulus;
      mpz_invert(inv.get_mpz_t(), u_mod.get_mpz_t(), modulus.get_mpz_t());
      t0 = (-(v / g) * inv) % modulus;
      if (t0 < 0) t0 += modulus;
    }
    for (std::size_t j = 0; j < base.size(); ++j) {
      base[j] += step[j] * t0;
      step[j] *= modulus;
    }
    return true;
  }
};

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw InternalError("delta_equivalent: witness exponent overflows long");
  return z.get_si();
}

bool holds(const Rational& x, const Rational& y, const Rational& exponent) {
  // x / y == 2^exponent, which for rational x/y forces an integer exponent.
  if (!exponent.is_integer()) return false;
  return x / y == pow(Rational(2), exponent.numerator().get_si());
}

}  // namespace

bool delta_witness_holds(const ChainDelta& x, const ChainDelta& y, const DeltaWitness& w) {
  const std::size_t s = x.size();
  if (y.size() != s || w.n.size() != s || s == 0) return false;
  // 2^m x_1 = λ_1^{n_1} y_1  <=>  x_1/y_1 = 2^{L_1 n_1 - m}
  if (!holds(x.entries[0], y.entries[0], x.lambdas[0].exponent() * Rational(w.n[0]) - Rational(w.m))) return false;
  for (std::size_t i = 1; i < s; ++i) {
    // μ_{i-1}^{n_{i-1}} x_i = λ_i^{n_i} y_i
    const Rational e = x.lambdas[i].exponent() * Rational(w.n[i]) - x.mus[i - 1].exponent() * Rational(w.n[i - 1]);
    if (!holds(x.entries[i], y.entries[i], e)) return false;
  }
  return true;
}

std::optional<DeltaWitness> delta_equivalent(const ChainDelta& x, const ChainDelta& y) {
  const std::size_t s = x.size();
  if (s == 0 || y.size() != s || x.lambdas != y.lambdas || x.mus != y.mus || x.lambdas.size() != s ||
      x.mus.size() != s) {
    throw UsageError("delta_equivalent: chains must have equal length and identical lambda/mu data");
  }
  std::vector<long> c(s);
  for (std::size_t i = 0; i < s; ++i) {
    auto k = pow2_exponent(x.entries[i] / y.entries[i]);
    if (!k) return std::nullopt;
    c[i] = *k;
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (x.lambdas[i].exponent().is_zero() || x.mus[i].exponent().is_zero()) {
      throw UsageError("delta_equivalent: lambda and mu must differ from 1");
    }
  }

  Family fam;
  fam.base.assign(1, Integer(0));
  fam.step.assign(1, Integer(1));

  // m = L_1 n_1 - c_1 must be an integer.
  {
    const Rational& l1 = x.lambdas[0].exponent();
    if (!fam.impose(l1.numerator() * fam.step[0], l1.numerator() * fam.base[0], l1.denominator())) {
      return std::nullopt;
    }
  }
  // n_i = (M_{i-1} n_{i-1} + c_i) / L_i with L = a/b, M = cm/dm:
  // n_i = b (cm n_{i-1} + c_i dm) / (a dm).
  for (std::size_t i = 1; i < s; ++i) {
    const Rational& l = x.lambdas[i].exponent();
    const Rational& m = x.mus[i - 1].exponent();
    const Integer a = l.numerator();
    const Integer b = l.denominator();
    const Integer cm = m.numerator();
    const Integer dm = m.denominator();
    Integer d = a * dm;
    Integer u = b * cm * fam.step[i - 1];
    Integer v = b * (cm * fam.base[i - 1] + Integer(c[i]) * dm);
    if (d < 0) {
      d = -d;
      u = -u;
      v = -v;
    }
    if (!fam.impose(u, v, d)) return std::nullopt;
    // Recompute with the restricted family: n_i = (u' t + v') / d exactly.
    const Integer u2 = b * cm * fam.step[i - 1];
    const Integer v2 = b * (cm * fam.base[i - 1] + Integer(c[i]) * dm);
    const Integer denom = a * dm;
    fam.base.push_back(v2 / denom);
    fam.step.push_back(u2 / denom);
  }

  DeltaWitness w;
  for (const Integer& b : fam.base) w.n.push_back(to_long(b));
  const Rational l1n1 = x.lambdas[0].exponent() * Rational(fam.base[0], Integer(1));
  w.m = to_long(l1n1.numerator()) - c[0];
  if (!l1n1.is_integer()) throw InternalError("delta_equivalent: m is not an integer");
  if (!delta_witness_holds(x, y, w)) throw InternalError("delta_equivalent: witness fails substitution");
  return w;
}

bool delta_equal(const DeltaInvariant& a, const DeltaInvariant& b) {
  if (a.chains.size() != b.chains.size()) return false;
  for (std::size_t i = 0; i < a.chains.size(); ++i) {
    const ChainDelta& x = a.chains[i];
    const ChainDelta& y = b.chains[i];
    if (x.size() != y.size() || x.lambdas != y.lambdas || x.mus != y.mus) return false;
    if (!delta_equivalent(x, y)) return false;
  }
  return true;
}

}  // namespace thompson
