#include "thompson/sigma.hpp"

#include <algorithm>
#include <map>

#include "thompson/errors.hpp"

namespace thompson {

std::vector<Bump> bumps(const PLMap& f, const FixedStructure& fs) {
  std::vector<Bump> out;
  for (const auto& iv : fs.intervals) {
    if (iv.sign == 0) continue;
    out.push_back({iv.lo, iv.hi, iv.sign, f.restrict(iv.lo, iv.hi)});
  }
  return out;
}

std::vector<Bump> bumps(const PLMap& f) { return bumps(f, fixed_structure(f)); }

std::vector<std::vector<Bump>> bump_chains(const PLMap& f, const FixedStructure& fs) {
  std::vector<std::vector<Bump>> chains;
  bool extend = false;
  for (std::size_t i = 0; i < fs.intervals.size(); ++i) {
    const auto& iv = fs.intervals[i];
    if (iv.sign == 0) {
      extend = false;
      continue;
    }
    Bump b{iv.lo, iv.hi, iv.sign, f.restrict(iv.lo, iv.hi)};
    if (extend) {
      chains.back().push_back(std::move(b));
    } else {
      chains.push_back({std::move(b)});
    }
    // The right endpoint of interval i is endpoint i+1.
    extend = !fs.endpoint_dyadic[i + 1];
  }
  return chains;
}

std::vector<std::vector<Bump>> bump_chains(const PLMap& f) { return bump_chains(f, fixed_structure(f)); }

FiniteFunction FiniteFunction::rotated(std::size_t k) const {
  FiniteFunction out{period, {}};
  const std::size_t t = points.size();
  out.points.reserve(t);
  const Rational& anchor = points.at(k).position;
  for (std::size_t i = k; i < t; ++i) out.points.push_back({points[i].position / anchor, points[i].value});
  for (std::size_t i = 0; i < k; ++i) out.points.push_back({points[i].position * period / anchor, points[i].value});
  return out;
}

FiniteFunction FiniteFunction::canonical() const {
  FiniteFunction best = *this;
  for (std::size_t k = 1; k < points.size(); ++k) {
    FiniteFunction r = rotated(k);
    if (std::lexicographical_compare(r.points.begin(), r.points.end(), best.points.begin(), best.points.end())) {
      best = std::move(r);
    }
  }
  return best;
}

Rational FiniteFunction::value_product() const {
  Rational p(1);
  for (const auto& pt : points) p *= pt.value;
  return p;
}

AnchoredFF anchored_finite_function(const PLMap& g) {
  const Rational& a = g.domain_lo();
  const auto nodes = g.nodes();
  if (nodes.empty()) throw InternalError("finite_function: bump without nodes");
  const Rational lambda = g.initial_slope();
  if (lambda <= Rational(1)) throw InternalError("finite_function: map is not increasing near its left end");
  const Rational& p_min = nodes.front().x;
  const PLMap g_inv = g.inverse();

  // Pull every node back into the fundamental domain (a + (p_min - a)/λ, p_min],
  // where g is scaling by λ about a, so orbit equality is equality of representatives.
  std::map<Rational, Rational> orbit_value;
  std::vector<Rational> rep_order;
  for (const Point& node : nodes) {
    Rational rep = node.x;
    while (rep > p_min) rep = g_inv(rep);
    Rational ratio = g.slope_ratio(node.x);
    auto [it, inserted] = orbit_value.try_emplace(rep, Rational(1));
    it->second *= ratio;
    if (inserted) rep_order.push_back(rep);
  }
  // Anchor: the orbit of the least node whose orbit product differs from 1.
  const Rational* anchor = nullptr;
  for (const Rational& rep : rep_order) {
    if (orbit_value.at(rep) != Rational(1)) {
      anchor = &rep;
      break;
    }
  }
  if (anchor == nullptr) throw InternalError("finite_function: every orbit product is 1");

  FiniteFunction c{lambda, {}};
  for (const auto& [rep, value] : orbit_value) {
    if (value == Rational(1)) continue;
    Rational pos = lambda * (rep - a) / (*anchor - a);
    while (pos >= lambda) pos /= lambda;
    while (pos < Rational(1)) pos *= lambda;
    c.points.push_back({std::move(pos), value});
  }
  std::sort(c.points.begin(), c.points.end());

  // Telescoping: the orbit products multiply to final slope / initial slope.
  if (c.value_product() != g.final_slope() / lambda) {
    throw InternalError("finite_function: orbit products do not telescope");
  }
  return {std::move(c), *anchor};
}

FiniteFunction finite_function_of_bump(const Bump& bump) { return finite_function_of_increasing(bump.increasing()); }

bool ff_equivalent(const FiniteFunction& a, const FiniteFunction& b) {
  if (a.period != b.period || a.points.size() != b.points.size()) return false;
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    if (a.rotated(k) == b) return true;
  }
  return false;
}

long ff_max_symmetry(const FiniteFunction& c) {
  const std::size_t t = c.points.size();
  long p = 1;
  for (std::size_t j = 1; j <= t; ++j) {
    if (t % j == 0 && c.rotated(j % t) == c) {
      p = static_cast<long>(t / j);
      break;
    }
  }
  // A rational translate of the anchor forces Λ^{1/p} rational: p | m when Λ = 2^m.
  if (auto m = pow2_exponent(c.period); m && *m % p != 0) {
    throw InternalError("ff_max_symmetry: symmetry order does not divide the period exponent");
  }
  return p;
}

SigmaInvariant sigma_of(const PLMap& f) {
  const FixedStructure fs = fixed_structure(f);
  SigmaInvariant s;
  s.sign_seq = fs.signs();
  for (const Bump& b : bumps(f, fs)) {
    s.slopes.push_back(b.restriction.initial_slope());
    s.classes.push_back(finite_function_of_bump(b).canonical());
  }
  return s;
}

SigmaMismatch sigma_compare(const SigmaInvariant& a, const SigmaInvariant& b) {
  if (a.sign_seq != b.sign_seq) return SigmaMismatch::sigma1;
  if (a.slopes != b.slopes) return SigmaMismatch::sigma2;
  if (a.classes != b.classes) return SigmaMismatch::sigma3;
  return SigmaMismatch::none;
}

bool sigma_equal(const FElement& f, const FElement& g) { return sigma_equal(sigma_of(f), sigma_of(g)); }

}  // namespace thompson
