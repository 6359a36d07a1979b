#include "thompson/plmap.hpp"

#include <algorithm>
#include <sstream>

#include "thompson/errors.hpp"

namespace thompson {

namespace {

std::string point_str(const Point& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

bool collinear(const Point& a, const Point& b, const Point& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

}  // namespace

std::vector<Point> PLMap::normalized(std::vector<Point> pts) {
  if (pts.size() < 2) throw ParseError("a PL map needs at least two breakpoints");
  std::vector<Point> out;
  out.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!out.empty() && (pts[i].x <= out.back().x || pts[i].y <= out.back().y)) {
      throw ParseError("breakpoint " + point_str(pts[i]) + " does not strictly increase after " +
                       point_str(out.back()));
    }
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), pts[i])) out.pop_back();
    out.push_back(std::move(pts[i]));
  }
  return out;
}

PLMap PLMap::from_points(std::vector<Point> pts) { return PLMap(normalized(std::move(pts))); }

PLMap PLMap::unit(std::vector<Point> pts) {
  if (pts.empty() || pts.front() != Point{0, 0}) {
    throw ParseError("first breakpoint must be (0/1, 0/1)" +
                     (pts.empty() ? std::string() : ", got " + point_str(pts.front())));
  }
  if (pts.back() != Point{1, 1}) {
    throw ParseError("last breakpoint must be (1/1, 1/1), got " + point_str(pts.back()));
  }
  return from_points(std::move(pts));
}

PLMap PLMap::identity(const Rational& a, const Rational& b) { return PLMap({{a, a}, {b, b}}); }

PLMap PLMap::affine(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (a >= b || c >= d) throw DomainError("affine map needs non-degenerate intervals");
  return PLMap({{a, c}, {b, d}});
}

bool PLMap::is_identity() const {
  return pts_.size() == 2 && pts_[0].x == pts_[0].y && pts_[1].x == pts_[1].y;
}

bool PLMap::is_unit() const { return pts_.front() == Point{0, 0} && pts_.back() == Point{1, 1}; }

std::size_t PLMap::piece_index(const Rational& x) const {
  if (x < domain_lo() || x > domain_hi()) {
    throw DomainError("point " + x.to_string() + " outside domain [" + domain_lo().to_string() + ", " +
                      domain_hi().to_string() + "]");
  }
  auto it = std::upper_bound(pts_.begin(), pts_.end(), x, [](const Rational& v, const Point& p) { return v < p.x; });
  std::size_t idx = static_cast<std::size_t>(it - pts_.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, piece_count() - 1);
}

Rational PLMap::operator()(const Rational& x) const {
  const std::size_t i = piece_index(x);
  const Point& p = pts_[i];
  if (x == p.x) return p.y;
  const Point& q = pts_[i + 1];
  if (x == q.x) return q.y;
  return p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x);
}

Rational PLMap::slope(std::size_t piece) const {
  const Point& p = pts_.at(piece);
  const Point& q = pts_.at(piece + 1);
  return (q.y - p.y) / (q.x - p.x);
}

Rational PLMap::slope_ratio(const Rational& x) const {
  if (x <= domain_lo() || x >= domain_hi()) throw DomainError("slope ratio needs an interior point");
  auto it = std::lower_bound(pts_.begin(), pts_.end(), x, [](const Point& p, const Rational& v) { return p.x < v; });
  if (it->x != x) return Rational(1);
  const auto i = static_cast<std::size_t>(it - pts_.begin());
  return slope(i) / slope(i - 1);
}

PLMap PLMap::inverse() const {
  std::vector<Point> out;
  out.reserve(pts_.size());
  for (const Point& p : pts_) out.push_back({p.y, p.x});
  return PLMap(std::move(out));
}

PLMap PLMap::restrict(const Rational& a, const Rational& b) const {
  if (a < domain_lo() || b > domain_hi() || a >= b) {
    throw DomainError("restriction [" + a.to_string() + ", " + b.to_string() + "] not inside the domain");
  }
  std::vector<Point> out{{a, (*this)(a)}};
  for (const Point& p : pts_) {
    if (p.x > a && p.x < b) out.push_back(p);
  }
  out.push_back({b, (*this)(b)});
  return PLMap(std::move(out));
}

PLMap compose(const PLMap& f, const PLMap& g) {
  if (g.range_lo() != f.domain_lo() || g.range_hi() != f.domain_hi()) {
    throw DomainError("compose: range of the inner map does not match the domain of the outer map");
  }
  const PLMap g_inv = g.inverse();
  std::vector<Rational> xs;
  xs.reserve(f.points().size() + g.points().size());
  for (const Point& p : g.points()) xs.push_back(p.x);
  for (const Point& p : f.nodes()) xs.push_back(g_inv(p.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (Rational& x : xs) {
    Rational y = f(g(x));
    pts.push_back({std::move(x), std::move(y)});
  }
  return PLMap::from_points(std::move(pts));
}

PLMap power(const PLMap& f, long n) {
  if (n == 0) return PLMap::identity(f.domain_lo(), f.domain_hi());
  if (n < 0) return power(f.inverse(), -n);
  if (n == 1) return f;
  PLMap result = PLMap::identity(f.domain_lo(), f.domain_hi());
  PLMap base = f;
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

PLMap concat(std::span<const PLMap> pieces) {
  if (pieces.empty()) throw DomainError("concat of no pieces");
  std::vector<Point> pts = pieces.front().points();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const auto& next = pieces[i].points();
    if (next.front() != pts.back()) {
      throw DomainError("concat: pieces do not meet at " + point_str(pts.back()));
    }
    pts.insert(pts.end(), next.begin() + 1, next.end());
  }
  return PLMap::from_points(std::move(pts));
}

std::string FCheck::message() const {
  switch (reason) {
    case Reason::none:
      return "element of F";
    case Reason::not_unit:
      return "not a map of [0,1] onto itself";
    case Reason::node:
      return "node at x=" + where.to_string() + " has non-dyadic coordinate " + value.to_string();
    case Reason::slope:
      return "slope " + value.to_string() + " on the piece starting at x=" + where.to_string() +
             " is not a power of 2";
  }
  return {};
}

FCheck check_in_F(const PLMap& f) {
  FCheck out;
  if (!f.is_unit()) {
    out.valid = false;
    out.reason = FCheck::Reason::not_unit;
    return out;
  }
  // Walk left to right so the first offence reported is the leftmost one.
  const auto& pts = f.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (i > 0) {
      for (const Rational* c : {&pts[i].x, &pts[i].y}) {
        if (!is_dyadic(*c)) {
          out.valid = false;
          out.reason = FCheck::Reason::node;
          out.where = pts[i].x;
          out.value = *c;
          return out;
        }
      }
    }
    Rational s = f.slope(i);
    if (!pow2_exponent(s)) {
      out.valid = false;
      out.reason = FCheck::Reason::slope;
      out.where = pts[i].x;
      out.value = std::move(s);
      return out;
    }
  }
  return out;
}

FElement::FElement(PLMap f) : map_(std::move(f)) {
  FCheck c = check_in_F(map_);
  if (!c.valid) throw DomainError("not an element of F: " + c.message());
}

FElement compose(const FElement& f, const FElement& g) { return FElement(compose(f.map(), g.map())); }
FElement inverse(const FElement& f) { return FElement(f.map().inverse()); }
FElement power(const FElement& f, long n) { return FElement(power(f.map(), n)); }

std::vector<int> FixedStructure::signs() const {
  std::vector<int> out;
  out.reserve(intervals.size());
  for (const auto& iv : intervals) out.push_back(iv.sign);
  return out;
}

FixedStructure fixed_structure(const PLMap& f) {
  if (!f.is_unit()) throw DomainError("fixed_structure needs a map of [0,1]");
  const auto& pts = f.points();
  // Zeros of d(x) = f(x) - x: breakpoints on the diagonal and crossings inside pieces.
  std::vector<Rational> zeros;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Rational d = pts[i].y - pts[i].x;
    if (d.is_zero()) zeros.push_back(pts[i].x);
    if (i + 1 < pts.size()) {
      const Rational d_next = pts[i + 1].y - pts[i + 1].x;
      if (d.sign() * d_next.sign() < 0) {
        // y_i + s (x - x_i) = x  =>  x = (y_i - s x_i) / (1 - s)
        const Rational s = f.slope(i);
        zeros.push_back((pts[i].y - s * pts[i].x) / (Rational(1) - s));
      }
    }
  }
  std::sort(zeros.begin(), zeros.end());
  zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());

  FixedStructure fs;
  for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
    const Rational mid = (zeros[i] + zeros[i + 1]) / Rational(2);
    const int sign = (f(mid) - mid).sign();
    // Zero-sign stretches split only at breakpoints; merge them back.
    if (sign == 0 && !fs.intervals.empty() && fs.intervals.back().sign == 0) {
      fs.intervals.back().hi = zeros[i + 1];
    } else {
      fs.intervals.push_back({zeros[i], zeros[i + 1], sign});
    }
  }
  fs.endpoint_dyadic.push_back(is_dyadic(fs.intervals.front().lo));
  for (const auto& iv : fs.intervals) fs.endpoint_dyadic.push_back(is_dyadic(iv.hi));
  return fs;
}

const FElement& generator(Generator g) {
  static const FElement x0(PLMap::unit({{0, 0}, {Rational(1, 2), Rational(1, 4)}, {Rational(3, 4), Rational(1, 2)}, {1, 1}}));
  static const FElement x1(PLMap::unit({{0, 0},
                                        {Rational(1, 2), Rational(1, 2)},
                                        {Rational(3, 4), Rational(5, 8)},
                                        {Rational(7, 8), Rational(3, 4)},
                                        {1, 1}}));
  static const FElement x0_inv = inverse(x0);
  static const FElement x1_inv = inverse(x1);
  switch (g) {
    case Generator::x0:
      return x0;
    case Generator::x0_inv:
      return x0_inv;
    case Generator::x1:
      return x1;
    case Generator::x1_inv:
      return x1_inv;
  }
  throw InternalError("unknown generator");
}

Generator inverse(Generator g) {
  switch (g) {
    case Generator::x0:
      return Generator::x0_inv;
    case Generator::x0_inv:
      return Generator::x0;
    case Generator::x1:
      return Generator::x1_inv;
    case Generator::x1_inv:
      return Generator::x1;
  }
  throw InternalError("unknown generator");
}

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::x0:
      return "x0";
    case Generator::x0_inv:
      return "x0^-1";
    case Generator::x1:
      return "x1";
    case Generator::x1_inv:
      return "x1^-1";
  }
  return "?";
}

std::vector<Generator> parse_word(std::string_view text) {
  std::vector<Generator> word;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string base = tok;
    long exponent = 1;
    if (auto sup = tok.find("⁻¹"); sup != std::string::npos && sup + std::string("⁻¹").size() == tok.size()) {
      base = tok.substr(0, sup);
      exponent = -1;
    } else if (auto caret = tok.find('^'); caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      if (e.size() >= 2 && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
      try {
        std::size_t used = 0;
        exponent = std::stol(e, &used);
        if (used != e.size()) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad exponent in word token '" + tok + "'");
      }
    }
    Generator g;
    if (base == "x0") {
      g = Generator::x0;
    } else if (base == "x1") {
      g = Generator::x1;
    } else {
      throw ParseError("unknown word token '" + tok + "' (expected x0 or x1 with optional ^n)");
    }
    if (exponent < 0) g = inverse(g);
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) word.push_back(g);
  }
  return word;
}

std::string format_word(std::span<const Generator> word) {
  std::string out;
  for (Generator g : word) {
    if (!out.empty()) out += ' ';
    out += generator_name(g);
  }
  return out;
}

FElement word_to_element(std::span<const Generator> word) {
  PLMap m = PLMap::identity();
  for (Generator g : word) m = compose(m, generator(g).map());
  return FElement(std::move(m));
}

}  // namespace thompson
