#include "ordrecon/plgroup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ordrecon {

namespace {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// r in Z[1/base]?
bool in_base_module(const Rat& r, int base) {
  Int den = rat_den(r);
  Int b(base);
  while (den > 1) {
    Int g = gcd_int(den, b);
    if (g == 1) return false;
    den /= g;
  }
  return true;
}

// r == base^k for some integer k?
bool is_base_power(const Rat& r, int base) {
  if (r <= 0) return false;
  Int num = rat_num(r), den = rat_den(r);
  Int b(base);
  auto pure_power = [&](Int v) {
    while (v > 1) {
      if (v % b != 0) return false;
      v /= b;
    }
    return v == 1;
  };
  if (num == 1) return pure_power(den);
  if (den == 1) return pure_power(num);
  return false;
}

}  // namespace

// --- ClosedSetLin ---

bool ClosedSetLin::contains(const ExtPoint& p) const {
  for (const auto& [lo, hi] : parts)
    if (lo <= p && p <= hi) return true;
  return false;
}

std::string ClosedSetLin::str() const {
  if (parts.empty()) return "{}";
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "u";
    if (parts[i].first == parts[i].second)
      s += "{" + parts[i].first.str() + "}";
    else
      s += "[" + parts[i].first.str() + "," + parts[i].second.str() + "]";
  }
  return s;
}

// --- PLMap ---

PLMap::PLMap() : preserving_(true), lslope_(1), rslope_(1) {
  nodes_.emplace_back(Rat(0), Rat(0));
}

PLMap::PLMap(std::vector<std::pair<Rat, Rat>> nodes, Rat left_slope,
             Rat right_slope, bool orientation_preserving)
    : preserving_(orientation_preserving),
      nodes_(std::move(nodes)),
      lslope_(std::move(left_slope)),
      rslope_(std::move(right_slope)) {
  if (lslope_ <= 0 || rslope_ <= 0)
    throw std::invalid_argument("tail slopes must be positive magnitudes");
  if (nodes_.empty()) {
    if (lslope_ != rslope_)
      throw std::invalid_argument("empty node list needs equal tail slopes");
    Rat s = lslope_;
    nodes_.emplace_back(Rat(0), Rat(0));
    lslope_ = rslope_ = s;
  }
  for (size_t i = 0; i + 1 < nodes_.size(); ++i) {
    if (!(nodes_[i].first < nodes_[i + 1].first))
      throw std::invalid_argument("breakpoints must be strictly increasing");
    bool up = nodes_[i].second < nodes_[i + 1].second;
    if (up != preserving_ || nodes_[i].second == nodes_[i + 1].second)
      throw std::invalid_argument("values violate declared orientation");
  }
  canonicalize();
}

Rat PLMap::segment_slope(size_t i) const {
  return (nodes_[i + 1].second - nodes_[i].second) /
         (nodes_[i + 1].first - nodes_[i].first);
}

void PLMap::canonicalize() {
  Rat el = preserving_ ? lslope_ : -lslope_;
  Rat er = preserving_ ? rslope_ : -rslope_;
  std::vector<std::pair<Rat, Rat>> kept;
  for (const auto& n : nodes_) {
    while (kept.size() >= 2) {
      const auto& a = kept[kept.size() - 2];
      const auto& b = kept[kept.size() - 1];
      Rat s1 = (b.second - a.second) / (b.first - a.first);
      Rat s2 = (n.second - b.second) / (n.first - b.first);
      if (s1 == s2)
        kept.pop_back();
      else
        break;
    }
    kept.push_back(n);
  }
  while (kept.size() >= 2) {
    Rat s = (kept[1].second - kept[0].second) / (kept[1].first - kept[0].first);
    if (s == el)
      kept.erase(kept.begin());
    else
      break;
  }
  while (kept.size() >= 2) {
    size_t k = kept.size();
    Rat s = (kept[k - 1].second - kept[k - 2].second) /
            (kept[k - 1].first - kept[k - 2].first);
    if (s == er)
      kept.pop_back();
    else
      break;
  }
  if (kept.size() == 1 && lslope_ == rslope_) {
    // Pure affine map: anchor at 0.
    Rat y0 = kept[0].second + el * (Rat(0) - kept[0].first);
    kept[0] = {Rat(0), y0};
  }
  nodes_ = std::move(kept);
}

PLMap PLMap::translation(const Rat& t) {
  return PLMap({{Rat(0), t}}, Rat(1), Rat(1), true);
}

PLMap PLMap::affine(const Rat& slope, const Rat& offset) {
  if (slope == 0) throw std::invalid_argument("affine map needs nonzero slope");
  bool pres = slope > 0;
  Rat mag = pres ? slope : -slope;
  return PLMap({{Rat(0), offset}}, mag, mag, pres);
}

PLMap PLMap::reflection(const Rat& center) {
  return affine(Rat(-1), 2 * center);
}

bool PLMap::is_identity() const {
  return preserving_ && lslope_ == 1 && rslope_ == 1 && nodes_.size() == 1 &&
         nodes_[0] == std::pair<Rat, Rat>(Rat(0), Rat(0));
}

Rat PLMap::operator()(const Rat& x) const {
  Rat el = preserving_ ? lslope_ : -lslope_;
  Rat er = preserving_ ? rslope_ : -rslope_;
  if (x <= nodes_.front().first)
    return nodes_.front().second + el * (x - nodes_.front().first);
  if (x >= nodes_.back().first)
    return nodes_.back().second + er * (x - nodes_.back().first);
  size_t lo = 0, hi = nodes_.size() - 1;
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (nodes_[mid].first <= x)
      lo = mid;
    else
      hi = mid;
  }
  return nodes_[lo].second + segment_slope(lo) * (x - nodes_[lo].first);
}

ExtPoint PLMap::operator()(const ExtPoint& x) const {
  if (x.is_finite()) return ExtPoint((*this)(x.value()));
  bool to_pos = x.is_pos_inf() == preserving_;
  return to_pos ? ExtPoint::pos_inf() : ExtPoint::neg_inf();
}

LinInterval PLMap::image(const LinInterval& iv) const {
  ExtPoint a = (*this)(iv.lo), b = (*this)(iv.hi);
  return preserving_ ? LinInterval(a, b) : LinInterval(b, a);
}

RoSetLin PLMap::image(const RoSetLin& u) const {
  std::vector<LinInterval> out;
  out.reserve(u.components().size());
  for (const auto& c : u.components()) out.push_back(image(c));
  return RoSetLin::from_intervals(std::move(out));
}

PLMap PLMap::inverse() const {
  std::vector<std::pair<Rat, Rat>> inv;
  inv.reserve(nodes_.size());
  if (preserving_) {
    for (const auto& [x, y] : nodes_) inv.emplace_back(y, x);
    return PLMap(std::move(inv), Rat(1) / lslope_, Rat(1) / rslope_, true);
  }
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it)
    inv.emplace_back(it->second, it->first);
  return PLMap(std::move(inv), Rat(1) / rslope_, Rat(1) / lslope_, false);
}

PLMap compose(const PLMap& g, const PLMap& h) {
  PLMap hinv = h.inverse();
  std::set<Rat> xs;
  for (const auto& [x, y] : h.nodes()) xs.insert(x);
  for (const auto& [x, y] : g.nodes()) xs.insert(hinv(x));
  std::vector<std::pair<Rat, Rat>> nodes;
  for (const auto& x : xs) nodes.emplace_back(x, g(h(x)));
  bool pres = g.preserving() == h.preserving();
  Rat lmag, rmag;
  if (h.preserving()) {
    lmag = h.left_slope() * g.left_slope();
    rmag = h.right_slope() * g.right_slope();
  } else {
    lmag = h.left_slope() * g.right_slope();
    rmag = h.right_slope() * g.left_slope();
  }
  return PLMap(std::move(nodes), lmag, rmag, pres);
}

ClosedSetLin PLMap::fix_set() const {
  Rat el = preserving_ ? lslope_ : -lslope_;
  Rat er = preserving_ ? rslope_ : -rslope_;
  std::vector<std::pair<ExtPoint, ExtPoint>> parts;
  auto add_point = [&parts](const Rat& p) {
    parts.emplace_back(ExtPoint(p), ExtPoint(p));
  };
  // Left tail on (-inf, x_0].
  {
    const auto& [x0, y0] = nodes_.front();
    if (el == 1) {
      if (y0 == x0) parts.emplace_back(ExtPoint::neg_inf(), ExtPoint(x0));
    } else {
      Rat xs = (y0 - el * x0) / (1 - el);
      if (xs <= x0) add_point(xs);
    }
  }
  for (size_t i = 0; i + 1 < nodes_.size(); ++i) {
    const auto& [xa, ya] = nodes_[i];
    const auto& [xb, yb] = nodes_[i + 1];
    Rat s = segment_slope(i);
    if (s == 1) {
      if (ya == xa) parts.emplace_back(ExtPoint(xa), ExtPoint(xb));
    } else {
      Rat xs = (ya - s * xa) / (1 - s);
      if (xa <= xs && xs <= xb) add_point(xs);
    }
  }
  {
    const auto& [xk, yk] = nodes_.back();
    if (er == 1) {
      if (yk == xk) parts.emplace_back(ExtPoint(xk), ExtPoint::pos_inf());
    } else {
      Rat xs = (yk - er * xk) / (1 - er);
      if (xs >= xk) add_point(xs);
    }
  }
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ClosedSetLin out;
  for (const auto& p : parts) {
    if (!out.parts.empty() && p.first <= out.parts.back().second) {
      if (out.parts.back().second < p.second)
        out.parts.back().second = p.second;
    } else {
      out.parts.push_back(p);
    }
  }
  return out;
}

std::vector<LinInterval> PLMap::supp() const {
  ClosedSetLin fps = fix_set();
  std::vector<LinInterval> out;
  if (fps.parts.empty()) {
    out.push_back(LinInterval::whole_line());
    return out;
  }
  if (!fps.parts.front().first.is_neg_inf())
    out.emplace_back(ExtPoint::neg_inf(), fps.parts.front().first);
  for (size_t i = 0; i + 1 < fps.parts.size(); ++i)
    out.emplace_back(fps.parts[i].second, fps.parts[i + 1].first);
  if (!fps.parts.back().second.is_pos_inf())
    out.emplace_back(fps.parts.back().second, ExtPoint::pos_inf());
  return out;
}

RoSetLin PLMap::var() const { return RoSetLin::from_intervals(supp()); }

bool PLMap::bounded() const {
  RoSetLin v = var();
  if (v.empty()) return true;
  return v.components().front().lo.is_finite() &&
         v.components().back().hi.is_finite();
}

bool PLMap::bounded_above() const {
  RoSetLin v = var();
  return v.empty() || v.components().back().hi.is_finite();
}

bool PLMap::bounded_below() const {
  RoSetLin v = var();
  return v.empty() || v.components().front().lo.is_finite();
}

bool PLMap::pointwise_geq_id() const {
  if (!preserving_) return false;
  for (const auto& [x, y] : nodes_)
    if (y < x) return false;
  Rat el = lslope_, er = rslope_;
  if (el > 1) return false;
  if (er < 1) return false;
  return true;
}

bool PLMap::pointwise_leq_id() const {
  if (!preserving_) return false;
  for (const auto& [x, y] : nodes_)
    if (y > x) return false;
  if (lslope_ < 1) return false;
  if (rslope_ > 1) return false;
  return true;
}

std::string PLMap::str() const {
  std::string s = preserving_ ? "pl+[" : "pl-[";
  s += "l:" + rat_str(lslope_) + ";";
  for (const auto& [x, y] : nodes_)
    s += "(" + rat_str(x) + "," + rat_str(y) + ")";
  s += ";r:" + rat_str(rslope_) + "]";
  return s;
}

PLMap lattice_sup(const PLMap& g, const PLMap& h) {
  if (!g.preserving() || !h.preserving())
    throw std::invalid_argument("lattice undefined for order-reversing maps");
  std::set<Rat> xs;
  for (const auto& [x, y] : g.nodes()) xs.insert(x);
  for (const auto& [x, y] : h.nodes()) xs.insert(x);
  std::vector<Rat> base(xs.begin(), xs.end());
  std::set<Rat> all(xs);
  auto add_crossing = [&](const Rat& a, const Rat& b) {
    // Both maps affine on [a,b]; insert interior crossing if present.
    Rat da = g(a) - h(a), db = g(b) - h(b);
    if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
      Rat t = da / (da - db);
      all.insert(a + t * (b - a));
    }
  };
  for (size_t i = 0; i + 1 < base.size(); ++i) add_crossing(base[i], base[i + 1]);
  // Tail crossings.
  {
    Rat a = base.front();
    Rat sg = g.left_slope(), sh = h.left_slope();
    if (sg != sh) {
      Rat da = g(a) - h(a);
      // d(x) = da + (sg - sh)(x - a); zero at x = a - da/(sg - sh)
      Rat xz = a - da / (sg - sh);
      if (xz < a) all.insert(xz);
    }
    Rat b = base.back();
    sg = g.right_slope();
    sh = h.right_slope();
    if (sg != sh) {
      Rat db = g(b) - h(b);
      Rat xz = b - db / (sg - sh);
      if (xz > b) all.insert(xz);
    }
  }
  std::vector<std::pair<Rat, Rat>> nodes;
  for (const auto& x : all) nodes.emplace_back(x, std::max(g(x), h(x)));
  Rat probe_l = nodes.front().first - 1;
  Rat lmag = g(probe_l) >= h(probe_l) ? g.left_slope() : h.left_slope();
  Rat probe_r = nodes.back().first + 1;
  Rat rmag = g(probe_r) >= h(probe_r) ? g.right_slope() : h.right_slope();
  return PLMap(std::move(nodes), lmag, rmag, true);
}

PLMap lattice_inf(const PLMap& g, const PLMap& h) {
  return lattice_sup(g.inverse(), h.inverse()).inverse();
}

PLMap bump(const LinInterval& iv, BumpDir dir) {
  PLMap up;
  if (iv.is_bounded()) {
    const Rat& a = iv.lo.value();
    Rat len = iv.hi.value() - iv.lo.value();
    up = PLMap({{a, a},
                {a + len / 4, a + len / 2},
                {a + len / 2, a + 3 * len / 4},
                {a + len, a + len}},
               Rat(1), Rat(1), true);
  } else if (iv.is_whole()) {
    up = PLMap::translation(Rat(1));
  } else if (iv.lo.is_finite()) {
    const Rat& a = iv.lo.value();
    up = PLMap({{a, a}}, Rat(1), Rat(2), true);
  } else {
    const Rat& b = iv.hi.value();
    up = PLMap({{b, b}}, Rat(1, 2), Rat(1), true);
  }
  return dir == BumpDir::Up ? up : up.inverse();
}

PLMap splice(const std::vector<std::pair<LinInterval, PLMap>>& pieces) {
  std::vector<std::pair<LinInterval, PLMap>> ps = pieces;
  std::sort(ps.begin(), ps.end(), [](const auto& a, const auto& b) {
    if (a.first.lo < b.first.lo) return true;
    if (b.first.lo < a.first.lo) return false;
    return a.first.hi < b.first.hi;
  });
  for (size_t i = 0; i + 1 < ps.size(); ++i)
    if (ps[i + 1].first.lo < ps[i].first.hi)
      throw SpliceError("splice intervals overlap", ps[i + 1].first.lo);
  std::set<Rat> xs;
  Rat lmag(1), rmag(1);
  for (const auto& [iv, g] : ps) {
    if (!g.preserving())
      throw SpliceError("order-reversing piece cannot be spliced", iv.lo);
    if (iv.lo.is_finite()) {
      if (g(iv.lo.value()) != iv.lo.value())
        throw SpliceError("piece does not fix its boundary", iv.lo);
      xs.insert(iv.lo.value());
    } else {
      lmag = g.left_slope();
    }
    if (iv.hi.is_finite()) {
      if (g(iv.hi.value()) != iv.hi.value())
        throw SpliceError("piece does not fix its boundary", iv.hi);
      xs.insert(iv.hi.value());
    } else {
      rmag = g.right_slope();
    }
    for (const auto& [x, y] : g.nodes())
      if (iv.contains(ExtPoint(x))) xs.insert(x);
  }
  if (xs.empty()) {
    if (ps.size() == 1) return ps[0].second;
    throw SpliceError("nothing to splice", ExtPoint::neg_inf());
  }
  auto value_at = [&ps](const Rat& x) {
    for (const auto& [iv, g] : ps)
      if (iv.contains(ExtPoint(x))) return g(x);
    return x;
  };
  std::vector<std::pair<Rat, Rat>> nodes;
  for (const auto& x : xs) nodes.emplace_back(x, value_at(x));
  return PLMap(std::move(nodes), lmag, rmag, true);
}

bool giap_member(const PLMap& g, const GiapSpec& spec) {
  if (!g.preserving()) return false;
  if (spec.interval) {
    // supp(g) must lie inside the closure of the interval.
    for (const auto& c : g.supp()) {
      if (c.lo < spec.interval->lo || spec.interval->hi < c.hi) return false;
    }
  }
  if (!is_base_power(g.left_slope(), spec.base)) return false;
  if (!is_base_power(g.right_slope(), spec.base)) return false;
  const auto& ns = g.nodes();
  for (size_t i = 0; i + 1 < ns.size(); ++i) {
    Rat s = (ns[i + 1].second - ns[i].second) / (ns[i + 1].first - ns[i].first);
    if (!is_base_power(s, spec.base)) return false;
  }
  // Breakpoints and their images in A = Z[1/base]; with base-power slopes
  // this makes g(A) = A.
  for (const auto& [x, y] : ns)
    if (!in_base_module(x, spec.base) || !in_base_module(y, spec.base))
      return false;
  return true;
}

// --- PLCircleMap ---

PLCircleMap::PLCircleMap() : deg_(1) { nodes_.emplace_back(Rat(0), Rat(0)); }

PLCircleMap::PLCircleMap(std::vector<std::pair<Rat, Rat>> nodes, int deg)
    : deg_(deg) {
  if (deg != 1 && deg != -1) throw std::invalid_argument("deg must be +-1");
  if (nodes.empty()) throw std::invalid_argument("circle map needs a node");
  for (auto& [x, y] : nodes) {
    Int m = floor_rat(x);
    x -= Rat(m);
    y -= Rat(m) * deg;
  }
  std::sort(nodes.begin(), nodes.end());
  for (size_t i = 0; i + 1 < nodes.size(); ++i)
    if (nodes[i].first == nodes[i + 1].first) {
      if (nodes[i].second != nodes[i + 1].second)
        throw std::invalid_argument("conflicting node values");
    }
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  // Normalize the lift so the first value lies in [0,1).
  Int shift = floor_rat(nodes.front().second);
  for (auto& [x, y] : nodes) y -= Rat(shift);
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    bool up = nodes[i].second < nodes[i + 1].second;
    if (nodes[i].second == nodes[i + 1].second || up != (deg_ == 1))
      throw std::invalid_argument("lift values violate degree");
  }
  Rat wrap_target = nodes.front().second + deg_;
  if (nodes.size() > 1) {
    bool ok = deg_ == 1 ? nodes.back().second < wrap_target
                        : nodes.back().second > wrap_target;
    if (!ok) throw std::invalid_argument("lift does not close up over a period");
  }
  nodes_ = std::move(nodes);
  canonicalize();
}

void PLCircleMap::canonicalize() {
  size_t k = nodes_.size();
  if (k <= 1) {
    if (k == 1 && nodes_[0].first != 0) {
      // Single node with slope 1 everywhere: rotation; anchor at 0.
      Rat y0 = nodes_[0].second + deg_ * (Rat(0) + 1 - nodes_[0].first) - deg_;
      nodes_[0] = {Rat(0), y0 - Rat(floor_rat(y0))};
    }
    return;
  }
  auto slope_between = [this](const std::pair<Rat, Rat>& a,
                              const std::pair<Rat, Rat>& b, bool wrap) {
    Rat dx = b.first - a.first + (wrap ? Rat(1) : Rat(0));
    Rat dy = b.second - a.second + (wrap ? Rat(deg_) : Rat(0));
    return dy / dx;
  };
  std::vector<std::pair<Rat, Rat>> kept;
  size_t n = nodes_.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& prev = nodes_[(i + n - 1) % n];
    const auto& next = nodes_[(i + 1) % n];
    bool wrap_in = i == 0;
    bool wrap_out = i == n - 1;
    Rat s1 = slope_between(prev, nodes_[i], wrap_in);
    Rat s2 = slope_between(nodes_[i], next, wrap_out);
    if (n == 1 || s1 != s2) kept.push_back(nodes_[i]);
  }
  if (kept.empty()) {
    // Constant slope 1 (rotation) or -1 (reflection): anchor at 0.
    Rat y0 = lift(Rat(0));
    kept.emplace_back(Rat(0), y0 - Rat(floor_rat(y0)));
  }
  nodes_ = std::move(kept);
}

PLCircleMap PLCircleMap::rotation(const Rat& t) {
  return PLCircleMap({{Rat(0), mod1(t)}}, 1);
}

PLCircleMap PLCircleMap::reflection(const CirclePoint& fixed) {
  return PLCircleMap({{Rat(0), 2 * fixed.value()}}, -1);
}

bool PLCircleMap::is_identity() const {
  return deg_ == 1 && nodes_.size() == 1 &&
         nodes_[0] == std::pair<Rat, Rat>(Rat(0), Rat(0));
}

Rat PLCircleMap::lift(const Rat& x) const {
  const Rat& x0 = nodes_.front().first;
  Int m = floor_rat(x - x0);
  Rat xr = x - Rat(m);  // in [x0, x0+1)
  size_t k = nodes_.size();
  size_t lo = 0;
  while (lo + 1 < k && nodes_[lo + 1].first <= xr) ++lo;
  Rat xa = nodes_[lo].first, ya = nodes_[lo].second;
  Rat xb, yb;
  if (lo + 1 < k) {
    xb = nodes_[lo + 1].first;
    yb = nodes_[lo + 1].second;
  } else {
    xb = x0 + 1;
    yb = nodes_.front().second + deg_;
  }
  Rat y = ya + (yb - ya) / (xb - xa) * (xr - xa);
  return y + Rat(m) * deg_;
}

CirclePoint PLCircleMap::operator()(const CirclePoint& p) const {
  return CirclePoint(lift(p.value()));
}

CircInterval PLCircleMap::image(const CircInterval& a) const {
  if (a.whole) return CircInterval::whole_circle();
  CirclePoint s = (*this)(a.start), e = (*this)(a.end);
  return deg_ == 1 ? CircInterval(s, e) : CircInterval(e, s);
}

RoSetCirc PLCircleMap::image(const RoSetCirc& u) const {
  if (u.is_whole()) return RoSetCirc::whole();
  std::vector<CircInterval> arcs;
  arcs.reserve(u.arcs().size());
  for (const auto& a : u.arcs()) arcs.push_back(image(a));
  return RoSetCirc::from_arcs(std::move(arcs));
}

PLCircleMap PLCircleMap::inverse() const {
  std::vector<std::pair<Rat, Rat>> inv;
  inv.reserve(nodes_.size());
  for (const auto& [x, y] : nodes_) {
    Int m = floor_rat(y);
    inv.emplace_back(y - Rat(m), x - Rat(m) * deg_);
  }
  return PLCircleMap(std::move(inv), deg_);
}

PLCircleMap compose(const PLCircleMap& g, const PLCircleMap& h) {
  PLCircleMap hinv = h.inverse();
  std::set<Rat> xs;
  for (const auto& [x, y] : h.nodes()) xs.insert(x);
  for (const auto& [x, y] : g.nodes()) xs.insert(mod1(hinv.lift(x)));
  std::vector<std::pair<Rat, Rat>> nodes;
  for (const auto& x : xs) nodes.emplace_back(x, g.lift(h.lift(x)));
  return PLCircleMap(std::move(nodes), g.deg() * h.deg());
}

namespace {

struct CircleFixData {
  std::vector<CirclePoint> points;                      // isolated
  std::vector<std::pair<CirclePoint, CirclePoint>> arcs;  // closed fixed arcs
};

CircleFixData circle_fixed(const PLCircleMap& g) {
  CircleFixData out;
  const auto& ns = g.nodes();
  size_t k = ns.size();
  Rat x0 = ns.front().first;
  auto seg = [&](size_t i) {
    Rat xa = ns[i].first, ya = ns[i].second;
    Rat xb = i + 1 < k ? ns[i + 1].first : x0 + 1;
    Rat yb = i + 1 < k ? ns[i + 1].second : ns.front().second + g.deg();
    return std::array<Rat, 4>{xa, ya, xb, yb};
  };
  Rat phimin, phimax;
  bool first = true;
  for (size_t i = 0; i < k; ++i) {
    auto [xa, ya, xb, yb] = seg(i);
    for (const Rat& v : {ya - xa, yb - xb}) {
      if (first || v < phimin) phimin = v;
      if (first || v > phimax) phimax = v;
      first = false;
    }
  }
  for (Int m = floor_rat(phimin) + (floor_rat(phimin) < phimin ? 1 : 0);
       Rat(m) <= phimax; ++m) {
    for (size_t i = 0; i < k; ++i) {
      auto [xa, ya, xb, yb] = seg(i);
      Rat pa = ya - xa, pb = yb - xb;
      if (pa == pb) {
        if (pa == Rat(m))
          out.arcs.emplace_back(CirclePoint(xa), CirclePoint(xb));
      } else {
        // phi is affine and injective on the segment.
        if ((pa <= Rat(m) && Rat(m) <= pb) || (pb <= Rat(m) && Rat(m) <= pa)) {
          Rat t = (Rat(m) - pa) / (pb - pa);
          Rat xs = xa + t * (xb - xa);
          if (xa <= xs && xs < xb) out.points.emplace_back(xs);
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CirclePoint> PLCircleMap::isolated_fixed_points() const {
  auto data = circle_fixed(*this);
  std::vector<CirclePoint> pts;
  for (const auto& p : data.points) {
    bool in_arc_closure = false;
    for (const auto& [s, e] : data.arcs)
      if (p == s || p == e || CircInterval(s, e).contains(p)) {
        in_arc_closure = true;
        break;
      }
    if (!in_arc_closure) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(),
            [](const CirclePoint& a, const CirclePoint& b) {
              return a.value() < b.value();
            });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

RoSetCirc PLCircleMap::var() const {
  auto data = circle_fixed(*this);
  std::set<Rat> cuts;
  for (const auto& p : data.points) cuts.insert(p.value());
  for (const auto& [s, e] : data.arcs) {
    cuts.insert(s.value());
    cuts.insert(e.value());
  }
  if (cuts.empty()) return RoSetCirc::whole();
  if (cuts.size() == 1) {
    // Single isolated fixed point: int(cl) of the punctured support is
    // the whole circle.
    if (data.arcs.empty()) return RoSetCirc::whole();
    return RoSetCirc();  // single degenerate arc cannot occur
  }
  std::vector<CirclePoint> cutv;
  for (const auto& r : cuts) cutv.emplace_back(r);
  auto fixed_contains = [&data](const CirclePoint& p) {
    for (const auto& [s, e] : data.arcs) {
      if (p == s || p == e) return true;
      if (CircInterval(s, e).contains(p)) return true;
    }
    return false;
  };
  return detail_glue_arcs(
      cutv, [&](const CirclePoint& p) { return !fixed_contains(p); });
}

bool PLCircleMap::bounded() const {
  if (is_identity()) return true;
  auto data = circle_fixed(*this);
  return !data.arcs.empty();
}

PLCircleMap circle_bump(const CircInterval& arc, BumpDir dir) {
  if (arc.whole)
    throw std::invalid_argument("circle bump needs a proper arc");
  Rat s = arc.start.value();
  Rat len = arc.length();
  PLCircleMap up({{s, s},
                  {s + len / 4, s + len / 2},
                  {s + len / 2, s + 3 * len / 4},
                  {s + len, s + len}},
                 1);
  return dir == BumpDir::Up ? up : up.inverse();
}

bool giap_member(const PLCircleMap& g, int base) {
  if (g.deg() != 1) return false;
  const auto& ns = g.nodes();
  size_t k = ns.size();
  Rat x0 = ns.front().first;
  for (size_t i = 0; i < k; ++i) {
    Rat xa = ns[i].first, ya = ns[i].second;
    if (!in_base_module(xa, base) || !in_base_module(ya, base)) return false;
    Rat xb = i + 1 < k ? ns[i + 1].first : x0 + 1;
    Rat yb = i + 1 < k ? ns[i + 1].second : ns.front().second + 1;
    if (!is_base_power((yb - ya) / (xb - xa), base)) return false;
  }
  return true;
}

std::string PLCircleMap::str() const {
  std::string s = deg_ == 1 ? "plc+[" : "plc-[";
  for (const auto& [x, y] : nodes_)
    s += "(" + rat_str(x) + "," + rat_str(y) + ")";
  s += "]";
  return s;
}

}  // namespace ordrecon
