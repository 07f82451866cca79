#include "ordrecon/roalg.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ordrecon {

// --- RoSetLin ---

RoSetLin RoSetLin::from_intervals(std::vector<LinInterval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const LinInterval& a, const LinInterval& b) {
              if (a.lo < b.lo) return true;
              if (b.lo < a.lo) return false;
              return a.hi < b.hi;
            });
  RoSetLin out;
  for (const auto& iv : intervals) {
    if (!out.comps_.empty() && iv.lo <= out.comps_.back().hi) {
      // Overlapping or touching: int(cl) closes the shared endpoint.
      if (out.comps_.back().hi < iv.hi) out.comps_.back().hi = iv.hi;
    } else {
      out.comps_.push_back(iv);
    }
  }
  return out;
}

bool RoSetLin::contains(const ExtPoint& p) const {
  for (const auto& c : comps_)
    if (c.contains(p)) return true;
  return false;
}

std::string RoSetLin::str() const {
  if (comps_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += "u";
    s += comps_[i].str();
  }
  return s;
}

RoSetLin ro_sum(const RoSetLin& u, const RoSetLin& v) {
  std::vector<LinInterval> all = u.components();
  all.insert(all.end(), v.components().begin(), v.components().end());
  return RoSetLin::from_intervals(std::move(all));
}

RoSetLin ro_meet(const RoSetLin& u, const RoSetLin& v) {
  std::vector<LinInterval> out;
  for (const auto& a : u.components())
    for (const auto& b : v.components()) {
      ExtPoint lo = std::max(a.lo, b.lo, [](const ExtPoint& x,
                                            const ExtPoint& y) { return x < y; });
      ExtPoint hi = std::min(a.hi, b.hi, [](const ExtPoint& x,
                                            const ExtPoint& y) { return x < y; });
      if (lo < hi) out.emplace_back(lo, hi);
    }
  return RoSetLin::from_intervals(std::move(out));
}

RoSetLin ro_complement(const RoSetLin& u) {
  if (u.empty()) return RoSetLin::whole();
  std::vector<LinInterval> out;
  const auto& cs = u.components();
  if (!cs.front().lo.is_neg_inf())
    out.emplace_back(ExtPoint::neg_inf(), cs.front().lo);
  for (size_t i = 0; i + 1 < cs.size(); ++i)
    out.emplace_back(cs[i].hi, cs[i + 1].lo);
  if (!cs.back().hi.is_pos_inf())
    out.emplace_back(cs.back().hi, ExtPoint::pos_inf());
  return RoSetLin::from_intervals(std::move(out));
}

RoSetLin ro_diff(const RoSetLin& u, const RoSetLin& v) {
  return ro_meet(u, ro_complement(v));
}

bool ro_leq(const RoSetLin& u, const RoSetLin& v) {
  for (const auto& a : u.components()) {
    bool covered = false;
    for (const auto& b : v.components())
      if (b.lo <= a.lo && a.hi <= b.hi) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool ro_disjoint(const RoSetLin& u, const RoSetLin& v) {
  return ro_meet(u, v).empty();
}

// --- RoSetCirc ---

// Canonicalizes an in/out labelling of the elementary arcs cut by `cuts`:
// result is int(cl(union of in-arcs)).  At a cut point whose two
// neighbours are in, the point itself belongs (true for every operation
// here because operands are canonical), so gluing runs is exact.
RoSetCirc detail_glue_arcs(const std::vector<CirclePoint>& cuts,
                           const std::function<bool(const CirclePoint&)>& in) {
  size_t m = cuts.size();
  std::vector<bool> flag(m);
  for (size_t i = 0; i < m; ++i) {
    CircInterval e(cuts[i], cuts[(i + 1) % m]);
    flag[i] = in(e.sample());
  }
  if (std::all_of(flag.begin(), flag.end(), [](bool b) { return b; }))
    return RoSetCirc::whole();
  RoSetCirc result;
  if (std::none_of(flag.begin(), flag.end(), [](bool b) { return b; }))
    return result;
  size_t anchor = 0;
  while (flag[anchor]) ++anchor;
  std::vector<CircInterval> out;
  size_t i = anchor;
  do {
    if (flag[i]) {
      size_t j = i;
      while (flag[(j + 1) % m]) j = (j + 1) % m;
      out.emplace_back(cuts[i], cuts[(j + 1) % m]);
      i = (j + 1) % m;
    } else {
      i = (i + 1) % m;
    }
  } while (i != anchor);
  std::sort(out.begin(), out.end(),
            [](const CircInterval& a, const CircInterval& b) {
              return a.start.value() < b.start.value();
            });
  result.arcs_ = std::move(out);
  return result;
}

namespace {

std::vector<CirclePoint> cut_points(const RoSetCirc& u, const RoSetCirc& v) {
  std::set<Rat> s;
  for (const auto& a : u.arcs()) {
    s.insert(a.start.value());
    s.insert(a.end.value());
  }
  for (const auto& a : v.arcs()) {
    s.insert(a.start.value());
    s.insert(a.end.value());
  }
  std::vector<CirclePoint> cuts;
  for (const auto& r : s) cuts.emplace_back(r);
  return cuts;
}

}  // namespace

RoSetCirc RoSetCirc::from_arcs(std::vector<CircInterval> arcs) {
  for (const auto& a : arcs)
    if (a.whole) return RoSetCirc::whole();
  RoSetCirc u;
  if (arcs.empty()) return u;
  std::set<Rat> s;
  for (const auto& a : arcs) {
    s.insert(a.start.value());
    s.insert(a.end.value());
  }
  std::vector<CirclePoint> cuts;
  for (const auto& r : s) cuts.emplace_back(r);
  auto in = [&arcs](const CirclePoint& p) {
    for (const auto& a : arcs)
      if (a.contains(p)) return true;
    return false;
  };
  return detail_glue_arcs(cuts, in);
}

bool RoSetCirc::contains(const CirclePoint& p) const {
  if (whole_) return true;
  for (const auto& a : arcs_)
    if (a.contains(p)) return true;
  return false;
}

std::string RoSetCirc::str() const {
  if (whole_) return "1";
  if (arcs_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < arcs_.size(); ++i) {
    if (i) s += "u";
    s += arcs_[i].str();
  }
  return s;
}

RoSetCirc ro_sum(const RoSetCirc& u, const RoSetCirc& v) {
  if (u.is_whole() || v.is_whole()) return RoSetCirc::whole();
  if (u.empty()) return v;
  if (v.empty()) return u;
  auto cuts = cut_points(u, v);
  return detail_glue_arcs(
      cuts, [&](const CirclePoint& p) { return u.contains(p) || v.contains(p); });
}

RoSetCirc ro_meet(const RoSetCirc& u, const RoSetCirc& v) {
  if (u.is_whole()) return v;
  if (v.is_whole()) return u;
  if (u.empty() || v.empty()) return RoSetCirc();
  auto cuts = cut_points(u, v);
  return detail_glue_arcs(
      cuts, [&](const CirclePoint& p) { return u.contains(p) && v.contains(p); });
}

RoSetCirc ro_complement(const RoSetCirc& u) {
  if (u.is_whole()) return RoSetCirc();
  if (u.empty()) return RoSetCirc::whole();
  auto cuts = cut_points(u, RoSetCirc());
  return detail_glue_arcs(cuts,
                         [&](const CirclePoint& p) { return !u.contains(p); });
}

RoSetCirc ro_diff(const RoSetCirc& u, const RoSetCirc& v) {
  return ro_meet(u, ro_complement(v));
}

bool ro_leq(const RoSetCirc& u, const RoSetCirc& v) {
  if (v.is_whole() || u.empty()) return true;
  if (u.is_whole()) return false;
  for (const auto& a : u.arcs()) {
    bool covered = false;
    for (const auto& b : v.arcs())
      if (ccw_dist(b.start, a.start) + a.length() <= b.length()) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool ro_disjoint(const RoSetCirc& u, const RoSetCirc& v) {
  return ro_meet(u, v).empty();
}

// --- Hulls and segregation ---

std::optional<LinInterval> convex_hull(const RoSetLin& u) {
  if (u.empty()) return std::nullopt;
  return LinInterval(u.components().front().lo, u.components().back().hi);
}

bool ro_lt(const RoSetLin& u, const RoSetLin& v) {
  if (u.empty() || v.empty()) return false;
  return u.components().back().hi <= v.components().front().lo;
}

bool seg_lin(const RoSetLin& u, const RoSetLin& v) {
  if (u.empty() || v.empty()) return true;
  return ro_lt(u, v) || ro_lt(v, u);
}

std::optional<std::pair<CircInterval, CircInterval>> seg_circ_witness(
    const RoSetCirc& u, const RoSetCirc& v) {
  if (u.empty() || v.empty() || u.is_whole() || v.is_whole())
    return std::nullopt;
  std::vector<Rat> pts;
  for (const auto& r : endpoints(u)) pts.push_back(r);
  for (const auto& r : endpoints(v)) pts.push_back(r);
  for (const auto& p : pts)
    for (const auto& q : pts) {
      if (p == q) continue;
      CircInterval i1{CirclePoint(p), CirclePoint(q)};
      CircInterval i2{CirclePoint(q), CirclePoint(p)};
      if (ro_leq(u, RoSetCirc::arc(i1)) && ro_leq(v, RoSetCirc::arc(i2)))
        return std::make_pair(i1, i2);
    }
  return std::nullopt;
}

bool seg_circ(const RoSetCirc& u, const RoSetCirc& v) {
  if (u.empty() || v.empty()) return true;
  if (u.is_whole() || v.is_whole()) return false;
  return seg_circ_witness(u, v).has_value();
}

// --- Pointwise order/orientation predicates ---

bool bets(const RoSetLin& u1, const RoSetLin& u2, const RoSetLin& u3) {
  if (u1.empty() || u2.empty() || u3.empty()) return false;
  return (ro_lt(u1, u2) && ro_lt(u2, u3)) || (ro_lt(u3, u2) && ro_lt(u2, u1));
}

bool crs(const RoSetCirc& u1, const RoSetCirc& u2, const RoSetCirc& u3) {
  if (u1.empty() || u2.empty() || u3.empty()) return false;
  if (!ro_disjoint(u1, u2) || !ro_disjoint(u2, u3) || !ro_disjoint(u1, u3))
    return false;
  for (const auto& a : u1.arcs())
    for (const auto& b : u2.arcs())
      for (const auto& c : u3.arcs())
        if (!cr(a.sample(), b.sample(), c.sample())) return false;
  return true;
}

bool crs_pm(const RoSetCirc& u1, const RoSetCirc& u2, const RoSetCirc& u3) {
  return crs(u1, u2, u3) || crs(u3, u2, u1);
}

bool seps(const RoSetCirc& u1, const RoSetCirc& u2, const RoSetCirc& u3,
          const RoSetCirc& u4) {
  const RoSetCirc* us[4] = {&u1, &u2, &u3, &u4};
  for (int i = 0; i < 4; ++i) {
    if (us[i]->empty()) return false;
    for (int j = i + 1; j < 4; ++j)
      if (!ro_disjoint(*us[i], *us[j])) return false;
  }
  for (const auto& a : u1.arcs())
    for (const auto& b : u2.arcs())
      for (const auto& c : u3.arcs())
        for (const auto& d : u4.arcs())
          if (!sep(a.sample(), b.sample(), c.sample(), d.sample())) return false;
  return true;
}

// --- Structural tests ---

bool is_bounded_interval(const RoSetLin& u) {
  return u.components().size() == 1 && u.components()[0].is_bounded();
}

bool is_bounded_interval(const RoSetCirc& u) {
  return !u.is_whole() && u.arcs().size() == 1;
}

bool is_ray(const RoSetLin& u) {
  return u.components().size() == 1 && u.components()[0].is_ray();
}

std::vector<Rat> endpoints(const RoSetLin& u) {
  std::set<Rat> s;
  for (const auto& c : u.components()) {
    if (c.lo.is_finite()) s.insert(c.lo.value());
    if (c.hi.is_finite()) s.insert(c.hi.value());
  }
  return {s.begin(), s.end()};
}

std::vector<Rat> endpoints(const RoSetCirc& u) {
  std::set<Rat> s;
  for (const auto& a : u.arcs()) {
    s.insert(a.start.value());
    s.insert(a.end.value());
  }
  return {s.begin(), s.end()};
}

Rat sample_point(const RoSetLin& u) {
  if (u.empty()) throw std::invalid_argument("sample_point of empty set");
  return u.components().front().sample();
}

CirclePoint sample_point(const RoSetCirc& u) {
  if (u.empty()) throw std::invalid_argument("sample_point of empty set");
  if (u.is_whole()) return CirclePoint(Rat(0));
  return u.arcs().front().sample();
}

}  // namespace ordrecon
