#include "thompson/conjugacy.hpp"

#include <algorithm>

#include "thompson/cornered.hpp"
#include "thompson/delta.hpp"
#include "thompson/errors.hpp"
#include "thompson/roots.hpp"

namespace thompson {

namespace {

std::vector<std::size_t> chain_lengths(const std::vector<std::vector<Bump>>& chains) {
  std::vector<std::size_t> out;
  for (const auto& c : chains) out.push_back(c.size());
  return out;
}

// Powers of two summing to a positive dyadic length, largest first.
std::vector<Rational> binary_pieces(const Rational& length) {
  const Integer num = length.numerator();
  const Integer den = length.denominator();
  std::vector<Rational> out;
  const auto bits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  for (long bit = bits - 1; bit >= 0; --bit) {
    if (mpz_tstbit(num.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      Integer piece(1);
      mpz_mul_2exp(piece.get_mpz_t(), piece.get_mpz_t(), static_cast<mp_bitcnt_t>(bit));
      out.emplace_back(piece, den);
    }
  }
  return out;
}

// Splits the largest piece in half until the list has `count` pieces.
void refine(std::vector<Rational>& pieces, std::size_t count) {
  while (pieces.size() < count) {
    auto it = std::max_element(pieces.begin(), pieces.end());
    Rational half = *it / Rational(2);
    *it = half;
    pieces.insert(it + 1, half);
  }
}

// Conjugator on one chain: h_i = k'_i⁻¹ ∘ u_i ∘ k_i ∘ f̂_i^{-n_i}, with k_i the
// conjugator onto the minimum cornered function whose slopes are the ones
// entering Δ.
std::vector<PLMap> chain_conjugator(const std::vector<Bump>& fc, const std::vector<Bump>& gc) {
  const ChainDelta x = chain_delta(fc);
  const ChainDelta y = chain_delta(gc);
  auto w = delta_equivalent(x, y);
  if (!w) throw InternalError("chain_conjugator: chains are not Δ-equivalent");
  std::vector<PLMap> out;
  for (std::size_t i = 0; i < fc.size(); ++i) {
    const Bump& bf = fc[i];
    const Bump& bg = gc[i];
    const PLMap gf = bf.increasing();
    const PLMap gg = bg.increasing();
    const PLMap lf = min_cornered_increasing(bf);
    const PLMap lg = min_cornered_increasing(bg);
    const PLMap kf = conjugator_with_initial_slope(gf, lf, alpha_beta(bf).alpha);
    const PLMap kg = conjugator_with_initial_slope(gg, lg, alpha_beta(bg).alpha);
    const PLMap u = PLMap::affine(bf.lo, bf.hi, bg.lo, bg.hi);
    const PLMap adjust = power(centralizer_generator(bf), -w->n[i]);
    out.push_back(compose(kg.inverse(), compose(u, compose(kf, adjust))));
  }
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::conjugate:
      return "conjugate";
    case Verdict::sigma1:
      return "sigma1";
    case Verdict::sigma2:
      return "sigma2";
    case Verdict::sigma3:
      return "sigma3";
    case Verdict::chain_structure:
      return "chain-structure";
    case Verdict::delta:
      return "delta";
  }
  return "?";
}

bool conjugate_in_PL(const FElement& f, const FElement& g) { return sigma_equal(f, g); }

Verdict conjugacy_verdict(const FElement& f, const FElement& g) {
  switch (sigma_compare(sigma_of(f), sigma_of(g))) {
    case SigmaMismatch::sigma1:
      return Verdict::sigma1;
    case SigmaMismatch::sigma2:
      return Verdict::sigma2;
    case SigmaMismatch::sigma3:
      return Verdict::sigma3;
    case SigmaMismatch::none:
      break;
  }
  const auto fc = bump_chains(f.map());
  const auto gc = bump_chains(g.map());
  if (chain_lengths(fc) != chain_lengths(gc)) return Verdict::chain_structure;
  DeltaInvariant df;
  DeltaInvariant dg;
  for (const auto& c : fc) df.chains.push_back(chain_delta(c));
  for (const auto& c : gc) dg.chains.push_back(chain_delta(c));
  return delta_equal(df, dg) ? Verdict::conjugate : Verdict::delta;
}

PLMap staircase_map(const Rational& src_lo, const Rational& src_hi, const Rational& dst_lo, const Rational& dst_hi) {
  for (const Rational* p : {&src_lo, &src_hi, &dst_lo, &dst_hi}) {
    if (!is_dyadic(*p)) throw DomainError("staircase_map: endpoint " + p->to_string() + " is not dyadic");
  }
  if (src_lo >= src_hi || dst_lo >= dst_hi) throw DomainError("staircase_map: empty interval");
  std::vector<Rational> src = binary_pieces(src_hi - src_lo);
  std::vector<Rational> dst = binary_pieces(dst_hi - dst_lo);
  const std::size_t count = std::max(src.size(), dst.size());
  refine(src, count);
  refine(dst, count);
  std::vector<Point> pts{{src_lo, dst_lo}};
  Rational x = src_lo;
  Rational y = dst_lo;
  for (std::size_t i = 0; i < count; ++i) {
    x += src[i];
    y += dst[i];
    pts.push_back({x, y});
  }
  return PLMap::from_points(std::move(pts));
}

PLMap pl_bump_conjugator(const Bump& f_bump, const Bump& g_bump) {
  if (f_bump.sign != g_bump.sign || f_bump.restriction.initial_slope() != g_bump.restriction.initial_slope() ||
      finite_function_of_bump(f_bump).canonical() != finite_function_of_bump(g_bump).canonical()) {
    throw DomainError("pl_bump_conjugator: bumps are not Σ-equivalent");
  }
  const CorneredConjugacy cf = conjugator_to_min_cornered(f_bump);
  const CorneredConjugacy cg = conjugator_to_min_cornered(g_bump);
  const PLMap u = PLMap::affine(f_bump.lo, f_bump.hi, g_bump.lo, g_bump.hi);
  PLMap h = compose(cg.conjugator.inverse(), compose(u, cf.conjugator));
  if (compose(h, f_bump.restriction) != compose(g_bump.restriction, h)) {
    throw InternalError("pl_bump_conjugator: h f h^-1 != g");
  }
  return h;
}

std::optional<FElement> conjugator_witness(const FElement& f, const FElement& g) {
  if (!conjugate_in_F(f, g)) return std::nullopt;
  const FixedStructure ff = fixed_structure(f.map());
  const FixedStructure fg = fixed_structure(g.map());
  const auto chains_f = bump_chains(f.map(), ff);
  const auto chains_g = bump_chains(g.map(), fg);

  std::vector<PLMap> pieces;
  std::size_t chain = 0;
  std::size_t i = 0;
  while (i < ff.intervals.size()) {
    const SignedInterval& a = ff.intervals[i];
    const SignedInterval& b = fg.intervals[i];
    if (a.sign == 0) {
      pieces.push_back(staircase_map(a.lo, a.hi, b.lo, b.hi));
      ++i;
      continue;
    }
    std::vector<PLMap> h = chain_conjugator(chains_f[chain], chains_g[chain]);
    i += chains_f[chain].size();
    ++chain;
    for (PLMap& m : h) pieces.push_back(std::move(m));
  }
  PLMap h = concat(pieces);
  FCheck check = check_in_F(h);
  if (!check.valid) throw InternalError("conjugator_witness: assembled map is not in F: " + check.message());
  if (compose(h, f.map()) != compose(g.map(), h)) throw InternalError("conjugator_witness: h f != g h");
  return FElement(std::move(h));
}

}  // namespace thompson
