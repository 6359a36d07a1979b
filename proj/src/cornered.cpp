#include "thompson/cornered.hpp"

#include "thompson/errors.hpp"

namespace thompson {

namespace {

// Order on anchored finite functions: compare at the smallest position where
// the values differ, a missing position having value 1.
int compare_at_first_difference(const FiniteFunction& a, const FiniteFunction& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& pa = a.points;
  const auto& pb = b.points;
  while (i < pa.size() || j < pb.size()) {
    Rational va(1);
    Rational vb(1);
    if (j >= pb.size() || (i < pa.size() && pa[i].position < pb[j].position)) {
      va = pa[i++].value;
    } else if (i >= pa.size() || pb[j].position < pa[i].position) {
      vb = pb[j++].value;
    } else {
      va = pa[i++].value;
      vb = pb[j++].value;
    }
    if (va != vb) return va < vb ? -1 : 1;
  }
  return 0;
}

// Bound on elementary conjugation steps before we declare the iteration stuck.
constexpr int kMaxElementarySteps = 100000;

// Conjugates by the elementary map at the last node; returns the conjugator.
PLMap move_last_node(PLMap& cur) {
  const Point& last = cur.nodes().back();
  PLMap h = elementary_map(cur.domain_lo(), cur.domain_hi(), last.x, cur.slope_ratio(last.x));
  cur = compose(compose(h, cur), h.inverse());
  return h;
}

}  // namespace

bool is_cornered(const PLMap& g) {
  const auto nodes = g.nodes();
  if (nodes.empty()) return false;
  return nodes.back().x < g(nodes.front().x);
}

FiniteFunction minimum_rotation(const FiniteFunction& c) {
  FiniteFunction best = c;
  for (std::size_t k = 1; k < c.points.size(); ++k) {
    FiniteFunction r = c.rotated(k);
    if (compare_at_first_difference(r, best) < 0) best = std::move(r);
  }
  return best;
}

CorneredFunction cornered_from_ff(const FiniteFunction& c, const Rational& a, const Rational& b) {
  if (c.points.empty() || c.points.front().position != Rational(1)) {
    throw DomainError("cornered_from_ff: finite function must be anchored at position 1");
  }
  const Rational& lambda = c.period;
  if (lambda <= Rational(1)) throw DomainError("cornered_from_ff: initial slope must exceed 1");
  const Rational width = b - a;
  const std::size_t k = c.points.size() - 1;

  // First node: q_0 - a = W (1 - λ z_0...z_k) / Σ_i λ^{s_i+1} z_0...z_{i-1} (1 - z_i),
  // where λ^{s_i} is the stored position.
  Rational running(1);  // z_0 ... z_{i-1}
  Rational denom(0);
  for (const auto& pt : c.points) {
    denom += lambda * pt.position * running * (Rational(1) - pt.value);
    running *= pt.value;
  }
  const Rational final_slope = lambda * running;
  if (final_slope >= Rational(1)) {
    throw DomainError("cornered_from_ff: final slope " + final_slope.to_string() + " is not below 1");
  }
  const Rational u = width * (Rational(1) - final_slope) / denom;
  if (u.sign() <= 0 || c.points[k].position * u >= width) {
    throw DomainError("cornered_from_ff: nodes do not fit inside the interval");
  }

  // Nodes q_i = a + λ^{s_i} (q_0 - a); slope after q_i is λ z_0 ... z_i.
  std::vector<Point> pts{{a, a}};
  Rational slope = lambda;
  Rational prev_x = a;
  Rational prev_y = a;
  for (const auto& pt : c.points) {
    Rational x = a + pt.position * u;
    Rational y = prev_y + slope * (x - prev_x);
    slope *= pt.value;
    prev_x = x;
    prev_y = y;
    pts.push_back({std::move(x), std::move(y)});
  }
  if (prev_y + slope * (b - prev_x) != b) throw InternalError("cornered_from_ff: endpoint does not close up");
  pts.push_back({b, b});
  PLMap l = PLMap::from_points(std::move(pts));
  if (l.nodes().size() != c.points.size()) throw InternalError("cornered_from_ff: node count mismatch");

  // Witness: x just below q_0 with l(x) halfway between the last node and l(q_0).
  const Rational& q0 = l.nodes().front().x;
  const Rational& qk = l.nodes().back().x;
  const Rational x = l.inverse()((qk + l(q0)) / Rational(2));
  return {std::move(l), 1, x};
}

PLMap elementary_map(const Rational& a, const Rational& b, const Rational& x, const Rational& r) {
  if (!(a < x && x < b) || r.sign() <= 0) throw DomainError("elementary_map needs a < x < b and r > 0");
  const Rational width = b - a;
  const Rational zeta = width / ((x - a) + r * (b - x));
  return PLMap::from_points({{a, a}, {x, a + zeta * (x - a)}, {b, b}});
}

Rational zeta_of(const FiniteFunction& c, const Rational& a, const Rational& b) {
  const CorneredFunction l = cornered_from_ff(c, a, b);
  const Rational width = b - a;
  const Rational q0_off = l.map.nodes().front().x - a;
  const FFPoint& last = c.points.back();
  return width / (last.position * q0_off * (Rational(1) - last.value) + width * last.value);
}

PLMap min_cornered_increasing(const Bump& bump) {
  const FiniteFunction c_m = minimum_rotation(finite_function_of_bump(bump));
  return cornered_from_ff(c_m, bump.lo, bump.hi).map;
}

CorneredConjugacy conjugator_to_min_cornered(const Bump& bump) {
  const PLMap g = bump.increasing();
  const Rational& a = bump.lo;
  const Rational& b = bump.hi;
  PLMap cur = g;
  PLMap k = PLMap::identity(a, b);

  int steps = 0;
  while (!is_cornered(cur)) {
    if (++steps > kMaxElementarySteps) throw InternalError("conjugator_to_min_cornered: iteration did not terminate");
    k = compose(move_last_node(cur), k);
  }
  const FiniteFunction c_m = minimum_rotation(finite_function_of_increasing(cur));
  for (std::size_t i = 0; finite_function_of_increasing(cur) != c_m; ++i) {
    if (i > c_m.points.size()) throw InternalError("conjugator_to_min_cornered: cycling missed the minimum");
    k = compose(move_last_node(cur), k);
  }
  PLMap l = cornered_from_ff(c_m, a, b).map;
  if (cur != l) throw InternalError("conjugator_to_min_cornered: reached a different cornered map");
  if (compose(k, g) != compose(l, k)) throw InternalError("conjugator_to_min_cornered: k g k^-1 != l");

  PLMap signed_l = bump.sign > 0 ? l : l.inverse();
  return {std::move(k), std::move(signed_l), std::move(l)};
}

AlphaBeta alpha_beta(const Bump& bump) {
  const PLMap g = bump.increasing();
  const Rational& a = bump.lo;
  const Rational& b = bump.hi;
  const AnchoredFF anchored = anchored_finite_function(g);
  const FiniteFunction& c = anchored.psi;
  const FiniteFunction c_m = minimum_rotation(c);

  // c_j is c re-anchored at point j+1, so c_t = c; the cycle u_t -> ... -> u_n
  // stops at the rotation equal to c_m. Prefer the shortest cycle.
  const std::size_t t = c.points.size() - 1;
  std::size_t n = t;
  if (c != c_m) {
    for (std::size_t anchor = t; anchor >= 1; --anchor) {
      if (c.rotated(anchor) == c_m) {
        n = anchor - 1;
        break;
      }
    }
  }
  Rational zeta_product(1);
  for (std::size_t j = t; j > n; --j) zeta_product *= zeta_of(c.rotated((j + 1) % (t + 1)), a, b);

  const Rational q = cornered_from_ff(c, a, b).map.nodes().front().x;
  const Rational alpha = zeta_product * (q - a) / (anchored.anchor_point - a);
  const PLMap l = cornered_from_ff(c_m, a, b).map;
  return {alpha, final_slope_of_conjugator(g, l, alpha)};
}

namespace {

// Tracks the conjugator with initial slope alpha along g-orbits. Starting at
// g's last node, pull back N steps into the region where g, l and the affine
// germ are all linear, then push forward until the image clears l's last node.
struct Transit {
  long back = 0;      // N
  long forward = 0;   // extra forward steps M
  Rational y;         // g^M(last node of g)
  Rational k_of_y;    // k(y)
};

Transit transit(const PLMap& g, const PLMap& l, const Rational& alpha) {
  const Rational& a = g.domain_lo();
  if (g.nodes().empty() || l.nodes().empty()) throw DomainError("conjugator: maps must have nodes");
  const Rational& g_first = g.nodes().front().x;
  const Rational& l_first = l.nodes().front().x;
  const Rational& l_last = l.nodes().back().x;
  const PLMap g_inv = g.inverse();
  Transit tr;
  tr.y = g.nodes().back().x;
  Rational z = tr.y;
  while (z > g_first || a + alpha * (z - a) > l_first) {
    z = g_inv(z);
    ++tr.back;
    if (tr.back > kMaxElementarySteps) throw InternalError("conjugator: pull-back did not reach the linear germ");
  }
  tr.k_of_y = a + alpha * (z - a);
  for (long i = 0; i < tr.back; ++i) tr.k_of_y = l(tr.k_of_y);
  while (tr.k_of_y < l_last) {
    tr.y = g(tr.y);
    tr.k_of_y = l(tr.k_of_y);
    ++tr.forward;
  }
  return tr;
}

}  // namespace

Rational final_slope_of_conjugator(const PLMap& g, const PLMap& l, const Rational& alpha) {
  const Rational& b = g.domain_hi();
  const Transit tr = transit(g, l, alpha);
  return (b - tr.k_of_y) / (b - tr.y);
}

PLMap conjugator_with_initial_slope(const PLMap& g, const PLMap& l, const Rational& alpha) {
  const Rational& a = g.domain_lo();
  const Rational& b = g.domain_hi();
  const Transit tr = transit(g, l, alpha);
  const long steps = tr.back + tr.forward;
  // On [a, y]: k = l^steps ∘ germ ∘ g^-steps.
  const PLMap pull = power(g, -steps).restrict(a, tr.y);
  const Rational& z = pull.range_hi();
  const Rational germ_end = a + alpha * (z - a);
  const PLMap germ = PLMap::affine(a, z, a, germ_end);
  const PLMap push = power(l, steps).restrict(a, germ_end);
  const PLMap left = compose(push, compose(germ, pull));
  const PLMap right = PLMap::affine(tr.y, b, tr.k_of_y, b);
  const PLMap parts[] = {left, right};
  PLMap k = concat(parts);
  if (compose(k, g) != compose(l, k)) throw InternalError("conjugator_with_initial_slope: k g k^-1 != l");
  return k;
}

}  // namespace thompson
