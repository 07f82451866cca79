#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordrecon/roalg.hpp"

namespace ordrecon {

// Closed subset of the completed line as finitely many closed intervals
// (degenerate intervals are single points).
struct ClosedSetLin {
  std::vector<std::pair<ExtPoint, ExtPoint>> parts;  // lo <= hi, sorted
  bool contains(const ExtPoint& p) const;
  std::string str() const;
};

struct SpliceError : std::runtime_error {
  SpliceError(const std::string& what, ExtPoint where)
      : std::runtime_error(what), boundary(std::move(where)) {}
  ExtPoint boundary;
};

// Exact piecewise-linear homeomorphism of the completed line.
//
// Representation: node list (x_i, y_i) with x strictly increasing plus two
// tail slopes (positive magnitudes; the orientation supplies the sign).
// Orientation-preserving maps have y strictly increasing, reversing ones
// strictly decreasing.  Canonical form drops collinear interior nodes and
// re-anchors pure affine maps at x = 0, so equality of maps is equality of
// representations.
class PLMap {
 public:
  PLMap();  // identity

  // Validates monotonicity/continuity; throws std::invalid_argument.
  PLMap(std::vector<std::pair<Rat, Rat>> nodes, Rat left_slope, Rat right_slope,
        bool orientation_preserving = true);

  static PLMap identity() { return PLMap(); }
  static PLMap translation(const Rat& t);
  static PLMap affine(const Rat& slope, const Rat& offset);
  static PLMap reflection(const Rat& center);  // x -> 2c - x

  bool preserving() const { return preserving_; }
  bool is_identity() const;
  const std::vector<std::pair<Rat, Rat>>& nodes() const { return nodes_; }
  const Rat& left_slope() const { return lslope_; }
  const Rat& right_slope() const { return rslope_; }

  Rat operator()(const Rat& x) const;
  ExtPoint operator()(const ExtPoint& x) const;
  LinInterval image(const LinInterval& iv) const;
  RoSetLin image(const RoSetLin& u) const;

  PLMap inverse() const;

  friend PLMap compose(const PLMap& g, const PLMap& h);  // g after h

  friend bool operator==(const PLMap& a, const PLMap& b) {
    return a.preserving_ == b.preserving_ && a.nodes_ == b.nodes_ &&
           a.lslope_ == b.lslope_ && a.rslope_ == b.rslope_;
  }
  friend bool operator!=(const PLMap& a, const PLMap& b) { return !(a == b); }

  // Fixed point set in the completed line (excluding the two ends).
  ClosedSetLin fix_set() const;
  // Open support {x : g(x) != x}, as plain open components (no closure).
  std::vector<LinInterval> supp() const;
  // var(g) = int(cl(supp(g))), canonical.
  RoSetLin var() const;

  bool bounded() const;         // tails are the identity
  bool bounded_above() const;   // right tail is the identity (Lft)
  bool bounded_below() const;   // left tail is the identity (Rt)

  // g(x) >= x everywhere / g(x) <= x everywhere (and g != Id for strictness
  // callers can test separately).
  bool pointwise_geq_id() const;
  bool pointwise_leq_id() const;

  std::string str() const;

 private:
  void canonicalize();
  Rat segment_slope(size_t i) const;  // slope on [x_i, x_{i+1}]
  bool preserving_;
  std::vector<std::pair<Rat, Rat>> nodes_;
  Rat lslope_;  // magnitude
  Rat rslope_;  // magnitude
};

PLMap compose(const PLMap& g, const PLMap& h);
inline PLMap conjugate(const PLMap& g, const PLMap& h) {
  // g^h = h g h^{-1}
  return compose(h, compose(g, h.inverse()));
}
inline PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(f, compose(g, compose(f.inverse(), g.inverse())));
}

// Pointwise max/min of two orientation-preserving maps; throws on
// reversing input (the lattice is undefined there).
PLMap lattice_sup(const PLMap& g, const PLMap& h);
PLMap lattice_inf(const PLMap& g, const PLMap& h);

enum class BumpDir { Up, Down };

// A nonidentity map supported inside I, with slopes in {1/2, 1, 2}; the
// local-movability witness.  dir=Up gives g(x) > x on the support.
PLMap bump(const LinInterval& iv, BumpDir dir = BumpDir::Up);

// Combines maps supported on pairwise disjoint intervals into one map that
// agrees with each piece on its interval and is the identity elsewhere.
// Boundary continuity and monotonicity violations raise SpliceError.
PLMap splice(const std::vector<std::pair<LinInterval, PLMap>>& pieces);

// Membership test for the PL groups G(I; A, P) with A = Z[1/base] and
// P = <base>.
struct GiapSpec {
  std::optional<LinInterval> interval;  // nullopt = whole line
  int base = 2;
};
bool giap_member(const PLMap& g, const GiapSpec& spec);

// --- Circle maps ---

// Exact PL homeomorphism of the completed circle, stored through a lift
// f with f(x+1) = f(x) + deg, deg = +1 (orientation-preserving) or -1.
class PLCircleMap {
 public:
  PLCircleMap();  // identity

  // Nodes give the lift on one period: base points in [0,1) with their
  // lift values; consecutive values must be strictly monotone in the
  // direction of deg and close up across the period.
  PLCircleMap(std::vector<std::pair<Rat, Rat>> nodes, int deg);

  static PLCircleMap identity() { return PLCircleMap(); }
  static PLCircleMap rotation(const Rat& t);
  static PLCircleMap reflection(const CirclePoint& fixed);

  int deg() const { return deg_; }
  bool preserving() const { return deg_ == 1; }
  bool is_identity() const;
  const std::vector<std::pair<Rat, Rat>>& nodes() const { return nodes_; }

  // Lift evaluation on the line.
  Rat lift(const Rat& x) const;
  CirclePoint operator()(const CirclePoint& p) const;
  CircInterval image(const CircInterval& a) const;
  RoSetCirc image(const RoSetCirc& u) const;

  PLCircleMap inverse() const;
  friend PLCircleMap compose(const PLCircleMap& g, const PLCircleMap& h);

  friend bool operator==(const PLCircleMap& a, const PLCircleMap& b) {
    return a.deg_ == b.deg_ && a.nodes_ == b.nodes_;
  }
  friend bool operator!=(const PLCircleMap& a, const PLCircleMap& b) {
    return !(a == b);
  }

  std::vector<CirclePoint> isolated_fixed_points() const;
  // var(g) as a regular open subset of the circle.
  RoSetCirc var() const;
  // Support is contained in some bounded arc (i.e. the map fixes an arc).
  bool bounded() const;

  std::string str() const;

 private:
  void canonicalize();
  int deg_;
  std::vector<std::pair<Rat, Rat>> nodes_;  // x in [0,1), strictly increasing
};

PLCircleMap compose(const PLCircleMap& g, const PLCircleMap& h);
inline PLCircleMap conjugate(const PLCircleMap& g, const PLCircleMap& h) {
  return compose(h, compose(g, h.inverse()));
}
inline PLCircleMap commutator(const PLCircleMap& f, const PLCircleMap& g) {
  return compose(f, compose(g, compose(f.inverse(), g.inverse())));
}

// Nonidentity map supported inside the arc, dyadic slopes.
PLCircleMap circle_bump(const CircInterval& arc, BumpDir dir = BumpDir::Up);

bool giap_member(const PLCircleMap& g, int base);

}  // namespace ordrecon
