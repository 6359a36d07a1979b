#include "thompson/roots.hpp"

#include <numeric>

#include "thompson/cornered.hpp"
#include "thompson/errors.hpp"

namespace thompson {

namespace {

struct BumpRootData {
  long symmetry = 1;       // p_i
  long slope_exponent = 0;  // m_i, initial slope of f on the bump is 2^{m_i}
};

BumpRootData root_data(const Bump& bump) {
  BumpRootData d;
  d.symmetry = ff_max_symmetry(finite_function_of_bump(bump));
  auto m = pow2_exponent(bump.restriction.initial_slope());
  if (!m) throw DomainError("bump initial slope is not a power of 2");
  d.slope_exponent = *m;
  return d;
}

void require_nontrivial(const FElement& f) {
  if (f.map().is_identity()) throw DomainError("the identity has no distinguished roots; a non-trivial element is required");
}

// Glues per-interval maps over the fixed structure: identity on fixed
// intervals, `on_bump(bump)` on bump domains.
template <typename OnBump>
PLMap glue(const PLMap& f, OnBump on_bump) {
  const FixedStructure fs = fixed_structure(f);
  std::vector<PLMap> pieces;
  for (const auto& iv : fs.intervals) {
    if (iv.sign == 0) {
      pieces.push_back(PLMap::identity(iv.lo, iv.hi));
    } else {
      pieces.push_back(on_bump(Bump{iv.lo, iv.hi, iv.sign, f.restrict(iv.lo, iv.hi)}));
    }
  }
  return concat(pieces);
}

}  // namespace

PLMap pl_root_of_bump(const Bump& bump, long p) {
  if (p < 1) throw DomainError("root order must be positive");
  const FiniteFunction c = finite_function_of_bump(bump);
  const long order = ff_max_symmetry(c);
  if (order % p != 0) {
    throw DomainError("bump class has " + std::to_string(order) + "-fold symmetry; no " + std::to_string(p) +
                      "-th root");
  }
  if (p == 1) return bump.restriction;

  // Root of the minimum cornered function l: the cornered map whose class is
  // the first 1/p of l's, over the period Λ^{1/p} (the position of point t/p).
  const CorneredConjugacy conj = conjugator_to_min_cornered(bump);
  const FiniteFunction c_m = minimum_rotation(c);
  const std::size_t block = c_m.points.size() / static_cast<std::size_t>(p);
  FiniteFunction sub{c_m.points[block].position, {c_m.points.begin(), c_m.points.begin() + static_cast<long>(block)}};
  const PLMap l_root = cornered_from_ff(sub, bump.lo, bump.hi).map;
  if (power(l_root, p) != conj.cornered_increasing) throw InternalError("pl_root_of_bump: block root is not a root of l");

  const PLMap k_inv = conj.conjugator.inverse();
  PLMap root = compose(k_inv, compose(l_root, conj.conjugator));
  if (bump.sign < 0) root = root.inverse();
  if (power(root, p) != bump.restriction) throw InternalError("pl_root_of_bump: root^p != f");
  return root;
}

PLMap centralizer_generator(const Bump& bump) {
  return pl_root_of_bump(bump, ff_max_symmetry(finite_function_of_bump(bump)));
}

bool root_in_F(const FElement& f, long p) {
  require_nontrivial(f);
  if (p < 1) throw DomainError("root order must be positive");
  for (const Bump& b : bumps(f.map())) {
    const BumpRootData d = root_data(b);
    if (d.symmetry % p != 0 || d.slope_exponent % p != 0) return false;
  }
  return true;
}

std::optional<FElement> root_extract(const FElement& f, long p) {
  if (!root_in_F(f, p)) return std::nullopt;
  PLMap g = glue(f.map(), [p](const Bump& b) { return pl_root_of_bump(b, p); });
  FCheck check = check_in_F(g);
  if (!check.valid) throw InternalError("root_extract: root left F: " + check.message());
  FElement root(std::move(g));
  if (power(root.map(), p) != f.map()) throw InternalError("root_extract: g^p != f");
  return root;
}

RootGenerator r_generator(const FElement& f) {
  require_nontrivial(f);
  long n = 0;
  for (const Bump& b : bumps(f.map())) {
    const BumpRootData d = root_data(b);
    n = std::gcd(n, d.symmetry);
    n = std::gcd(n, d.slope_exponent);
  }
  auto g = root_extract(f, n);
  if (!g) throw InternalError("r_generator: gcd order has no root");
  return {std::move(*g), n};
}

CentralizerStructure centralizer_structure(const FElement& f) {
  CentralizerStructure out;
  const FixedStructure fs = fixed_structure(f.map());
  for (const auto& iv : fs.intervals) {
    if (iv.sign == 0) out.fixed_intervals.push_back(iv);
  }
  out.fixed_components = out.fixed_intervals.size();
  if (f.map().is_identity()) return out;  // C(id) = F

  const auto chains = bump_chains(f.map(), fs);
  out.chains = chains.size();
  for (const auto& chain : chains) {
    long n = 0;
    for (const Bump& b : chain) {
      const BumpRootData d = root_data(b);
      n = std::gcd(n, d.symmetry);
      n = std::gcd(n, d.slope_exponent);
    }
    const Rational& lo = chain.front().lo;
    const Rational& hi = chain.back().hi;
    std::vector<PLMap> pieces;
    if (lo > Rational(0)) pieces.push_back(PLMap::identity(Rational(0), lo));
    for (const Bump& b : chain) pieces.push_back(pl_root_of_bump(b, n));
    if (hi < Rational(1)) pieces.push_back(PLMap::identity(hi, Rational(1)));
    PLMap gen = concat(pieces);
    FCheck check = check_in_F(gen);
    if (!check.valid) throw InternalError("centralizer_structure: chain generator left F: " + check.message());
    if (compose(gen, f.map()) != compose(f.map(), gen)) {
      throw InternalError("centralizer_structure: chain generator does not commute with f");
    }
    out.chain_generators.emplace_back(std::move(gen));
  }
  return out;
}

}  // namespace thompson
