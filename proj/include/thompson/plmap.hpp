#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/rational.hpp"

namespace thompson {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// An order-preserving piecewise-linear homeomorphism [x_0, x_n] -> [y_0, y_n],
/// stored as its breakpoint list. The list is always normalized: coordinates
/// strictly increase and no interior breakpoint is collinear with its
/// neighbours, so interior breakpoints are exactly the nodes and two maps are
/// equal iff their lists are equal.
///
/// Maps of (0,1) run from (0,0) to (1,1); maps between subintervals are used
/// for bump restrictions and conjugators.
class PLMap {
 public:
  /// Validates and normalizes. Throws ParseError naming the offending point.
  static PLMap from_points(std::vector<Point> pts);
  /// As from_points, additionally requiring (0,0) first and (1,1) last.
  static PLMap unit(std::vector<Point> pts);

  static PLMap identity(const Rational& a = Rational(0), const Rational& b = Rational(1));
  /// The affine map [a,b] -> [c,d].
  static PLMap affine(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

  const std::vector<Point>& points() const { return pts_; }
  std::span<const Point> nodes() const { return {pts_.data() + 1, pts_.size() - 2}; }
  std::size_t piece_count() const { return pts_.size() - 1; }

  const Rational& domain_lo() const { return pts_.front().x; }
  const Rational& domain_hi() const { return pts_.back().x; }
  const Rational& range_lo() const { return pts_.front().y; }
  const Rational& range_hi() const { return pts_.back().y; }

  bool is_identity() const;
  bool is_unit() const;

  /// Exact image of x. Throws DomainError outside the domain.
  Rational operator()(const Rational& x) const;

  Rational slope(std::size_t piece) const;
  Rational initial_slope() const { return slope(0); }
  Rational final_slope() const { return slope(piece_count() - 1); }
  /// Right derivative over left derivative at an interior point (1 off nodes).
  Rational slope_ratio(const Rational& x) const;

  PLMap inverse() const;
  /// Restriction to [a,b], which must lie inside the domain.
  PLMap restrict(const Rational& a, const Rational& b) const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  explicit PLMap(std::vector<Point> pts) : pts_(std::move(pts)) {}
  std::size_t piece_index(const Rational& x) const;
  static std::vector<Point> normalized(std::vector<Point> pts);

  std::vector<Point> pts_;
};

/// f ∘ g (apply g first). The range of g must equal the domain of f.
PLMap compose(const PLMap& f, const PLMap& g);

/// f^n for any integer n; f must map its domain onto itself when |n| != 1.
PLMap power(const PLMap& f, long n);

/// Joins maps on adjacent intervals: [a,b]->[c,d] followed by [b,e]->[d,h].
PLMap concat(std::span<const PLMap> pieces);

/// Result of checking membership in Thompson's group F.
struct FCheck {
  bool valid = true;
  enum class Reason { none, not_unit, node, slope } reason = Reason::none;
  /// Offending node x-coordinate, or the left end of the offending piece.
  Rational where;
  /// The offending coordinate or slope.
  Rational value;
  std::string message() const;
};

/// Checks that every node coordinate is dyadic and every slope a power of two.
FCheck check_in_F(const PLMap& f);

/// A PLMap certified to lie in F.
class FElement {
 public:
  /// Throws DomainError with the diagnosis when f is not in F.
  explicit FElement(PLMap f);
  static FElement identity() { return FElement(PLMap::identity()); }

  const PLMap& map() const { return map_; }
  Rational operator()(const Rational& x) const { return map_(x); }

  friend bool operator==(const FElement&, const FElement&) = default;

 private:
  PLMap map_;
};

FElement compose(const FElement& f, const FElement& g);
FElement inverse(const FElement& f);
FElement power(const FElement& f, long n);

/// A maximal interval of constant sign of f(x) - x.
struct SignedInterval {
  Rational lo;
  Rational hi;
  int sign = 0;
  friend bool operator==(const SignedInterval&, const SignedInterval&) = default;
};

/// Partition of (0,1) into maximal intervals on which sign(f(x) - x) is
/// constant. Adjacent bumps of equal sign stay separate (they meet at an
/// isolated fixed point).
struct FixedStructure {
  std::vector<SignedInterval> intervals;
  /// Dyadicity of the interval endpoints 0 = p_0 < p_1 < ... < p_m = 1.
  std::vector<bool> endpoint_dyadic;

  std::vector<int> signs() const;
};

FixedStructure fixed_structure(const PLMap& f);

enum class Generator { x0, x0_inv, x1, x1_inv };

/// The standard generators as maps of (0,1).
const FElement& generator(Generator g);

Generator inverse(Generator g);
std::string_view generator_name(Generator g);

/// Parses "x0 x1^-1 x0^2 ..." (also accepts "x0^-1" and "x0⁻¹").
std::vector<Generator> parse_word(std::string_view text);
std::string format_word(std::span<const Generator> word);

/// The product a_1 ∘ a_2 ∘ ... ∘ a_n, so the last letter acts first.
FElement word_to_element(std::span<const Generator> word);

}  // namespace thompson
