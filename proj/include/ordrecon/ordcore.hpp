#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "ordrecon/rational.hpp"

namespace ordrecon {

// A point of the completed line: a rational, or one of the two ends.
class ExtPoint {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtPoint() : kind_(Kind::Finite), value_(0) {}
  explicit ExtPoint(Rat v) : kind_(Kind::Finite), value_(std::move(v)) {}
  static ExtPoint neg_inf() { return ExtPoint(Kind::NegInf); }
  static ExtPoint pos_inf() { return ExtPoint(Kind::PosInf); }
  static ExtPoint finite(Rat v) { return ExtPoint(std::move(v)); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  // Only valid when finite.
  const Rat& value() const;

  friend bool operator==(const ExtPoint& a, const ExtPoint& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }
  friend bool operator<(const ExtPoint& a, const ExtPoint& b);
  friend bool operator>(const ExtPoint& a, const ExtPoint& b) { return b < a; }
  friend bool operator<=(const ExtPoint& a, const ExtPoint& b) { return !(b < a); }
  friend bool operator>=(const ExtPoint& a, const ExtPoint& b) { return !(a < b); }
  friend bool operator!=(const ExtPoint& a, const ExtPoint& b) { return !(a == b); }

  std::string str() const;
  // Accepts "-inf", "inf", "+inf", or a rational literal.
  static ExtPoint parse(const std::string& s);

 private:
  explicit ExtPoint(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rat value_;
};

// A point of the rational circle, normalized to [0,1).
class CirclePoint {
 public:
  CirclePoint() : value_(0) {}
  explicit CirclePoint(const Rat& v) : value_(mod1(v)) {}

  const Rat& value() const { return value_; }

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const CirclePoint& a, const CirclePoint& b) {
    return !(a == b);
  }

  std::string str() const { return rat_str(value_); }
  static CirclePoint parse(const std::string& s) {
    return CirclePoint(parse_rat(s));
  }

 private:
  Rat value_;
};

// Nonempty open interval of the completed line; rays and the whole line
// are encoded with infinite ends.
struct LinInterval {
  ExtPoint lo;
  ExtPoint hi;

  LinInterval(ExtPoint l, ExtPoint h);
  static LinInterval whole_line() {
    return LinInterval(ExtPoint::neg_inf(), ExtPoint::pos_inf());
  }

  bool contains(const ExtPoint& p) const { return lo < p && p < hi; }
  bool is_bounded() const { return lo.is_finite() && hi.is_finite(); }
  bool is_ray() const { return lo.is_finite() != hi.is_finite(); }
  bool is_whole() const { return lo.is_neg_inf() && hi.is_pos_inf(); }

  // Midpoint of a bounded interval; for rays, one unit in from the end.
  Rat sample() const;

  friend bool operator==(const LinInterval& a, const LinInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  std::string str() const { return "(" + lo.str() + "," + hi.str() + ")"; }
};

// Open circular arc {z : Cr(start, z, end)}, read counterclockwise.
// whole = entire circle; otherwise start != end.  The punctured circle
// C_x is deliberately unrepresentable.
struct CircInterval {
  CirclePoint start;
  CirclePoint end;
  bool whole = false;

  CircInterval(CirclePoint s, CirclePoint e);
  static CircInterval whole_circle() {
    CircInterval c;
    c.whole = true;
    return c;
  }

  bool contains(const CirclePoint& p) const;
  // Counterclockwise length in (0,1]; 1 for the whole circle.
  Rat length() const;
  // Point halfway around the arc from start.
  CirclePoint sample() const;

  friend bool operator==(const CircInterval& a, const CircInterval& b) {
    if (a.whole != b.whole) return false;
    return a.whole || (a.start == b.start && a.end == b.end);
  }
  std::string str() const {
    return whole ? "(whole)" : "(" + start.str() + "," + end.str() + ")";
  }

 private:
  CircInterval() = default;
};

// Betweenness: x<y<z or x>y>z.
bool bet(const ExtPoint& x, const ExtPoint& y, const ExtPoint& z);

// Equal direction: both pairs ascend or both descend.
bool ed(const ExtPoint& x1, const ExtPoint& x2, const ExtPoint& y1,
        const ExtPoint& y2);

// Betweenness recovered from Ed alone; agrees with bet everywhere.
bool bet_from_ed(const ExtPoint& x, const ExtPoint& y, const ExtPoint& z);

// Counterclockwise orientation of a distinct triple.
bool cr(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z);

// Cr on every i<j<k sub-triple.  n=2 means "distinct", n=1 and n=0 hold.
bool cr_n(const std::vector<CirclePoint>& points);

// Separation: {x1,x3} separates {x2,x4}.
bool sep(const CirclePoint& x1, const CirclePoint& x2, const CirclePoint& x3,
         const CirclePoint& x4);

// Equal orientation of two triples, by the direct definition.
bool eo(const std::array<CirclePoint, 3>& a, const std::array<CirclePoint, 3>& b);

// Equal orientation evaluated through the Sep-only formula, with the
// existential witnesses searched over midpoints of the arcs cut by the
// six inputs.  Agrees with eo on all inputs.
bool eo_from_sep(const std::array<CirclePoint, 3>& a,
                 const std::array<CirclePoint, 3>& b);

// Counterclockwise distance from a to b, in [0,1).
Rat ccw_dist(const CirclePoint& a, const CirclePoint& b);

// Point at ccw distance d from a.
CirclePoint ccw_advance(const CirclePoint& a, const Rat& d);

}  // namespace ordrecon
