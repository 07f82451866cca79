#include "ordrecon/dyadic.hpp"

#include <algorithm>

namespace ordrecon {

namespace {

void require_dyadic(const Rat& r, const char* what) {
  if (!is_dyadic(r))
    throw UnsupportedWitness(std::string("non-dyadic ") + what + ": " +
                             rat_str(r));
}

// Largest e such that 2^e <= limit and p is an integer multiple of 2^e.
int best_aligned_exponent(const Rat& p, const Rat& limit) {
  int e = floor_log2(limit);
  while (!is_integer(p * pow2(-e))) --e;
  return e;
}

}  // namespace

std::vector<Rat> dyadic_standard_cuts(const Rat& a, const Rat& b) {
  require_dyadic(a, "endpoint");
  require_dyadic(b, "endpoint");
  if (!(a < b)) throw UnsupportedWitness("empty dyadic interval");
  std::vector<Rat> cuts{a};
  Rat p = a;
  while (p < b) {
    int e = best_aligned_exponent(p, b - p);
    p += pow2(e);
    cuts.push_back(p);
  }
  return cuts;
}

PLMap dyadic_interval_map(const Rat& a, const Rat& b, const Rat& c,
                          const Rat& d) {
  auto src = dyadic_standard_cuts(a, b);
  auto dst = dyadic_standard_cuts(c, d);
  // Equalize piece counts by halving the widest (leftmost on tie) piece.
  auto split_once = [](std::vector<Rat>& cuts) {
    size_t best = 0;
    Rat w = cuts[1] - cuts[0];
    for (size_t i = 1; i + 1 < cuts.size(); ++i)
      if (cuts[i + 1] - cuts[i] > w) {
        w = cuts[i + 1] - cuts[i];
        best = i;
      }
    cuts.insert(cuts.begin() + best + 1, cuts[best] + w / 2);
  };
  while (src.size() < dst.size()) split_once(src);
  while (dst.size() < src.size()) split_once(dst);
  std::vector<std::pair<Rat, Rat>> nodes;
  nodes.reserve(src.size());
  for (size_t i = 0; i < src.size(); ++i) nodes.emplace_back(src[i], dst[i]);
  Rat lmag = (dst[1] - dst[0]) / (src[1] - src[0]);
  size_t k = src.size() - 1;
  Rat rmag = (dst[k] - dst[k - 1]) / (src[k] - src[k - 1]);
  return PLMap(std::move(nodes), lmag, rmag, true);
}

PLMap dyadic_point_witness(const std::vector<Rat>& src,
                           const std::vector<Rat>& dst,
                           const LinInterval& frame) {
  if (src.size() != dst.size())
    throw UnsupportedWitness("point tuples of unequal length");
  if (src.empty()) return PLMap::identity();
  for (const auto& r : src) require_dyadic(r, "source point");
  for (const auto& r : dst) require_dyadic(r, "target point");
  for (size_t i = 0; i + 1 < src.size(); ++i)
    if (!(src[i] < src[i + 1]) || !(dst[i] < dst[i + 1]))
      throw UnsupportedWitness("point tuples must be strictly increasing");
  Rat all_min = std::min(src.front(), dst.front());
  Rat all_max = std::max(src.back(), dst.back());
  Rat lo, hi;
  if (frame.lo.is_finite()) {
    lo = frame.lo.value();
    require_dyadic(lo, "frame endpoint");
    if (!(lo < std::min(src.front(), dst.front())))
      throw UnsupportedWitness("frame does not contain the points");
  } else {
    lo = all_min - 1;
  }
  if (frame.hi.is_finite()) {
    hi = frame.hi.value();
    require_dyadic(hi, "frame endpoint");
    if (!(std::max(src.back(), dst.back()) < hi))
      throw UnsupportedWitness("frame does not contain the points");
  } else {
    hi = all_max + 1;
  }
  std::vector<Rat> s{lo};
  s.insert(s.end(), src.begin(), src.end());
  s.push_back(hi);
  std::vector<Rat> t{lo};
  t.insert(t.end(), dst.begin(), dst.end());
  t.push_back(hi);
  // Pin every cut, then add each segment map's interior breakpoints.
  std::vector<std::pair<Rat, Rat>> nodes;
  for (size_t i = 0; i < s.size(); ++i) nodes.emplace_back(s[i], t[i]);
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == t[i] && s[i + 1] == t[i + 1]) continue;  // identity segment
    PLMap seg = dyadic_interval_map(s[i], s[i + 1], t[i], t[i + 1]);
    for (const auto& [x, y] : seg.nodes())
      if (s[i] < x && x < s[i + 1]) nodes.emplace_back(x, y);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return PLMap(std::move(nodes), Rat(1), Rat(1), true);
}

PLMap dyadic_point_witness_reversing(const std::vector<Rat>& src,
                                     const std::vector<Rat>& dst) {
  if (src.size() != dst.size() || src.empty())
    throw UnsupportedWitness("bad reversing witness request");
  PLMap ref = PLMap::reflection(Rat(0));
  std::vector<Rat> mid;
  mid.reserve(src.size());
  for (auto it = src.rbegin(); it != src.rend(); ++it) mid.push_back(-*it);
  std::vector<Rat> tgt(dst.rbegin(), dst.rend());
  PLMap w = dyadic_point_witness(mid, tgt);
  return compose(w, ref);
}

PLCircleMap dyadic_circle_point_witness(const std::vector<CirclePoint>& src,
                                        const std::vector<CirclePoint>& dst) {
  if (src.size() != dst.size() || src.empty())
    throw UnsupportedWitness("bad circle witness request");
  size_t n = src.size();
  if (!cr_n(src) || !cr_n(dst))
    throw UnsupportedWitness("circle witness tuples must be Cr-ordered");
  for (const auto& p : src) require_dyadic(p.value(), "source point");
  for (const auto& p : dst) require_dyadic(p.value(), "target point");
  std::vector<std::pair<Rat, Rat>> nodes;
  Rat sigma = src[0].value();
  Rat delta = dst[0].value();
  for (size_t i = 0; i < n; ++i) {
    Rat len_s = n == 1 ? Rat(1) : ccw_dist(src[i], src[(i + 1) % n]);
    Rat len_d = n == 1 ? Rat(1) : ccw_dist(dst[i], dst[(i + 1) % n]);
    nodes.emplace_back(sigma, delta);
    if (len_s != len_d) {
      PLMap seg = dyadic_interval_map(Rat(0), len_s, Rat(0), len_d);
      for (const auto& [x, y] : seg.nodes())
        if (0 < x && x < len_s) nodes.emplace_back(sigma + x, delta + y);
    }
    sigma += len_s;
    delta += len_d;
  }
  return PLCircleMap(std::move(nodes), 1);
}

PLCircleMap dyadic_circle_point_witness_reversing(
    const std::vector<CirclePoint>& src, const std::vector<CirclePoint>& dst) {
  if (src.size() != dst.size() || src.empty())
    throw UnsupportedWitness("bad reversing circle witness request");
  PLCircleMap ref = PLCircleMap::reflection(CirclePoint(Rat(0)));
  // ref(src) runs clockwise; reverse both lists to get ccw-aligned tuples.
  std::vector<CirclePoint> mid, tgt;
  for (auto it = src.rbegin(); it != src.rend(); ++it)
    mid.push_back(CirclePoint(-it->value()));
  for (auto it = dst.rbegin(); it != dst.rend(); ++it) tgt.push_back(*it);
  PLCircleMap w = dyadic_circle_point_witness(mid, tgt);
  return compose(w, ref);
}

Rat dyadic_inside(const LinInterval& iv) {
  if (iv.is_whole()) return Rat(0);
  if (iv.lo.is_neg_inf()) {
    Rat h = iv.hi.value();
    return is_dyadic(h) ? h - 1 : Rat(floor_rat(h));
  }
  if (iv.hi.is_pos_inf()) {
    Rat l = iv.lo.value();
    return is_dyadic(l) ? l + 1 : Rat(floor_rat(l) + 1);
  }
  // Smallest multiple of 2^-e strictly above lo, for the first e that fits.
  const Rat& a = iv.lo.value();
  const Rat& b = iv.hi.value();
  for (int e = 0;; ++e) {
    Rat step = pow2(-e);
    Rat cand = Rat(floor_rat(a / step) + 1) * step;
    if (cand < b) return cand;
  }
}

CirclePoint dyadic_inside(const CircInterval& arc) {
  if (arc.whole) return CirclePoint(Rat(0));
  Rat s = arc.start.value();
  Rat len = arc.length();
  for (int e = 0;; ++e) {
    Rat step = pow2(-e);
    Int k = floor_rat(s / step) + 1;
    Rat cand = Rat(k) * step;
    if (cand - s < len) return CirclePoint(cand);
  }
}

PLMap dyadic_interval_witness(const std::vector<LinInterval>& is,
                              const std::vector<LinInterval>& js) {
  if (is.size() != js.size())
    throw UnsupportedWitness("interval tuples of unequal length");
  std::vector<Rat> src, dst;
  for (size_t i = 0; i < is.size(); ++i) {
    src.push_back(dyadic_inside(is[i]));
    dst.push_back(dyadic_inside(js[i]));
  }
  return dyadic_point_witness(src, dst);
}

PLCircleMap dyadic_circle_interval_witness(const std::vector<CircInterval>& is,
                                           const std::vector<CircInterval>& js) {
  if (is.size() != js.size())
    throw UnsupportedWitness("arc tuples of unequal length");
  std::vector<CirclePoint> src, dst;
  for (size_t i = 0; i < is.size(); ++i) {
    src.push_back(dyadic_inside(is[i]));
    dst.push_back(dyadic_inside(js[i]));
  }
  return dyadic_circle_point_witness(src, dst);
}

}  // namespace ordrecon
