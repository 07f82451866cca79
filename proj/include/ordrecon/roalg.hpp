#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordrecon/ordcore.hpp"

namespace ordrecon {

// Regular open subset of the completed line: finitely many disjoint open
// intervals in increasing order with strict gaps between consecutive
// components.  The strict-gap invariant is exactly regular-openness, so
// U = int(cl(U)) holds by construction and equality is representational.
class RoSetLin {
 public:
  RoSetLin() = default;  // empty set (the zero of the algebra)

  // Canonicalizes an arbitrary finite union of intervals into the regular
  // open set int(cl(union)): overlapping or touching intervals merge.
  static RoSetLin from_intervals(std::vector<LinInterval> intervals);
  static RoSetLin interval(const LinInterval& iv) { return from_intervals({iv}); }
  static RoSetLin interval(const ExtPoint& lo, const ExtPoint& hi) {
    return from_intervals({LinInterval(lo, hi)});
  }
  static RoSetLin interval(const Rat& lo, const Rat& hi) {
    return interval(ExtPoint(lo), ExtPoint(hi));
  }
  static RoSetLin whole() { return interval(LinInterval::whole_line()); }

  const std::vector<LinInterval>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }
  bool is_whole() const {
    return comps_.size() == 1 && comps_[0].is_whole();
  }

  bool contains(const ExtPoint& p) const;
  bool contains(const Rat& p) const { return contains(ExtPoint(p)); }

  friend bool operator==(const RoSetLin& a, const RoSetLin& b) {
    return a.comps_ == b.comps_;
  }
  friend bool operator!=(const RoSetLin& a, const RoSetLin& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  std::vector<LinInterval> comps_;
};

class RoSetCirc;

// Canonicalization workhorse shared by the circle operations: builds the
// regular open set int(cl(union of in-labelled elementary arcs)).
RoSetCirc detail_glue_arcs(const std::vector<CirclePoint>& cuts,
                           const std::function<bool(const CirclePoint&)>& in);

// Regular open subset of the completed circle: the whole circle, or
// finitely many arcs whose closures are pairwise disjoint.  The punctured
// circle C_x canonicalizes to the whole circle.
class RoSetCirc {
 public:
  RoSetCirc() = default;  // empty

  static RoSetCirc from_arcs(std::vector<CircInterval> arcs);
  static RoSetCirc arc(const CircInterval& a) { return from_arcs({a}); }
  static RoSetCirc arc(const CirclePoint& s, const CirclePoint& e) {
    return from_arcs({CircInterval(s, e)});
  }
  static RoSetCirc arc(const Rat& s, const Rat& e) {
    return arc(CirclePoint(s), CirclePoint(e));
  }
  static RoSetCirc whole() {
    RoSetCirc u;
    u.whole_ = true;
    return u;
  }

  const std::vector<CircInterval>& arcs() const { return arcs_; }
  bool empty() const { return !whole_ && arcs_.empty(); }
  bool is_whole() const { return whole_; }

  bool contains(const CirclePoint& p) const;

  friend bool operator==(const RoSetCirc& a, const RoSetCirc& b) {
    return a.whole_ == b.whole_ && a.arcs_ == b.arcs_;
  }
  friend bool operator!=(const RoSetCirc& a, const RoSetCirc& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  friend RoSetCirc detail_glue_arcs(const std::vector<CirclePoint>& cuts,
                                    const std::function<bool(const CirclePoint&)>& in);
  bool whole_ = false;
  std::vector<CircInterval> arcs_;  // sorted by start, disjoint closures
};

// --- Boolean algebra operations (line) ---

RoSetLin ro_sum(const RoSetLin& u, const RoSetLin& v);
RoSetLin ro_meet(const RoSetLin& u, const RoSetLin& v);
RoSetLin ro_complement(const RoSetLin& u);
RoSetLin ro_diff(const RoSetLin& u, const RoSetLin& v);
bool ro_leq(const RoSetLin& u, const RoSetLin& v);
bool ro_disjoint(const RoSetLin& u, const RoSetLin& v);

// --- Boolean algebra operations (circle) ---

RoSetCirc ro_sum(const RoSetCirc& u, const RoSetCirc& v);
RoSetCirc ro_meet(const RoSetCirc& u, const RoSetCirc& v);
RoSetCirc ro_complement(const RoSetCirc& u);
RoSetCirc ro_diff(const RoSetCirc& u, const RoSetCirc& v);
bool ro_leq(const RoSetCirc& u, const RoSetCirc& v);
bool ro_disjoint(const RoSetCirc& u, const RoSetCirc& v);

// --- Hulls and segregation ---

// Smallest interval containing U; nullopt iff U is empty.
std::optional<LinInterval> convex_hull(const RoSetLin& u);

// Hulls disjoint (U < V, V < U, or one empty).
bool seg_lin(const RoSetLin& u, const RoSetLin& v);

// U and V fit in disjoint circular intervals (or one is empty).  Decided
// by searching separating arcs with endpoints drawn from the components.
bool seg_circ(const RoSetCirc& u, const RoSetCirc& v);

// The two disjoint enclosing arcs when seg_circ holds and both nonempty.
std::optional<std::pair<CircInterval, CircInterval>> seg_circ_witness(
    const RoSetCirc& u, const RoSetCirc& v);

// Pointwise order of nonempty sets: every u-point < every v-point.
bool ro_lt(const RoSetLin& u, const RoSetLin& v);

// --- Pointwise order/orientation predicates on sets ---

// Bets: all components nonempty and every selection is Bet-ordered.
bool bets(const RoSetLin& u1, const RoSetLin& u2, const RoSetLin& u3);

// Crs (one orientation): every selection counterclockwise.
bool crs(const RoSetCirc& u1, const RoSetCirc& u2, const RoSetCirc& u3);

// Crs or its reversal.
bool crs_pm(const RoSetCirc& u1, const RoSetCirc& u2, const RoSetCirc& u3);

// Seps: every selection satisfies Sep.
bool seps(const RoSetCirc& u1, const RoSetCirc& u2, const RoSetCirc& u3,
          const RoSetCirc& u4);

// --- Structural tests on the canonical form ---

bool is_bounded_interval(const RoSetLin& u);
bool is_bounded_interval(const RoSetCirc& u);
bool is_ray(const RoSetLin& u);

// All finite component endpoints, deduplicated and sorted.
std::vector<Rat> endpoints(const RoSetLin& u);
std::vector<Rat> endpoints(const RoSetCirc& u);

// A point of U (its first component's sample); U must be nonempty.
Rat sample_point(const RoSetLin& u);
CirclePoint sample_point(const RoSetCirc& u);

}  // namespace ordrecon
