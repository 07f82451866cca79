#include "ordrecon/ordcore.hpp"

#include <algorithm>
#include <set>

namespace ordrecon {

const Rat& ExtPoint::value() const {
  if (kind_ != Kind::Finite)
    throw std::logic_error("value() on infinite ExtPoint");
  return value_;
}

bool operator<(const ExtPoint& a, const ExtPoint& b) {
  if (a.kind_ == ExtPoint::Kind::NegInf)
    return b.kind_ != ExtPoint::Kind::NegInf;
  if (a.kind_ == ExtPoint::Kind::PosInf) return false;
  if (b.kind_ == ExtPoint::Kind::PosInf) return true;
  if (b.kind_ == ExtPoint::Kind::NegInf) return false;
  return a.value_ < b.value_;
}

std::string ExtPoint::str() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "inf";
    default:
      return rat_str(value_);
  }
}

ExtPoint ExtPoint::parse(const std::string& s) {
  if (s == "-inf") return neg_inf();
  if (s == "inf" || s == "+inf") return pos_inf();
  return finite(parse_rat(s));
}

LinInterval::LinInterval(ExtPoint l, ExtPoint h)
    : lo(std::move(l)), hi(std::move(h)) {
  if (!(lo < hi)) throw std::invalid_argument("empty interval " + lo.str() +
                                              ".." + hi.str());
}

Rat LinInterval::sample() const {
  if (is_bounded()) return (lo.value() + hi.value()) / 2;
  if (lo.is_finite()) return lo.value() + 1;
  if (hi.is_finite()) return hi.value() - 1;
  return Rat(0);
}

CircInterval::CircInterval(CirclePoint s, CirclePoint e)
    : start(std::move(s)), end(std::move(e)) {
  if (start == end)
    throw std::invalid_argument(
        "degenerate arc: the punctured circle is not regular open");
}

bool CircInterval::contains(const CirclePoint& p) const {
  if (whole) return true;
  return cr(start, p, end);
}

Rat CircInterval::length() const {
  if (whole) return Rat(1);
  return ccw_dist(start, end);
}

CirclePoint CircInterval::sample() const {
  if (whole) return CirclePoint(Rat(0));
  return ccw_advance(start, length() / 2);
}

bool bet(const ExtPoint& x, const ExtPoint& y, const ExtPoint& z) {
  return (x < y && y < z) || (x > y && y > z);
}

bool ed(const ExtPoint& x1, const ExtPoint& x2, const ExtPoint& y1,
        const ExtPoint& y2) {
  return (x1 < x2 && y1 < y2) || (x1 > x2 && y1 > y2);
}

bool bet_from_ed(const ExtPoint& x, const ExtPoint& y, const ExtPoint& z) {
  return ed(x, y, y, z);
}

bool cr(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
  const Rat& a = x.value();
  const Rat& b = y.value();
  const Rat& c = z.value();
  return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

bool cr_n(const std::vector<CirclePoint>& points) {
  size_t n = points.size();
  if (n <= 1) return true;
  if (n == 2) return points[0] != points[1];
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        if (!cr(points[i], points[j], points[k])) return false;
  return true;
}

bool sep(const CirclePoint& x1, const CirclePoint& x2, const CirclePoint& x3,
         const CirclePoint& x4) {
  return cr_n({x1, x2, x3, x4}) || cr_n({x4, x3, x2, x1});
}

bool eo(const std::array<CirclePoint, 3>& a,
        const std::array<CirclePoint, 3>& b) {
  return (cr(a[0], a[1], a[2]) && cr(b[0], b[1], b[2])) ||
         (cr(a[2], a[1], a[0]) && cr(b[2], b[1], b[0]));
}

Rat ccw_dist(const CirclePoint& a, const CirclePoint& b) {
  return mod1(b.value() - a.value());
}

CirclePoint ccw_advance(const CirclePoint& a, const Rat& d) {
  return CirclePoint(a.value() + d);
}

namespace {

struct CyclicVariant {
  CirclePoint x1, x2, x3;
};

}  // namespace

bool eo_from_sep(const std::array<CirclePoint, 3>& a,
                 const std::array<CirclePoint, 3>& b) {
  // Witness grid: the three quartile points of every arc the six inputs
  // cut the circle into.  Three interior points per arc realize every
  // arc-assignment and within-arc order pattern of the witness triple,
  // and the formula's truth depends only on that data.
  std::set<Rat> cuts;
  for (const auto& p : a) cuts.insert(p.value());
  for (const auto& p : b) cuts.insert(p.value());
  std::vector<CirclePoint> mids;
  std::vector<Rat> sorted(cuts.begin(), cuts.end());
  size_t n = sorted.size();
  for (size_t i = 0; i < n; ++i) {
    CirclePoint from{sorted[i]};
    CirclePoint to{sorted[(i + 1) % n]};
    Rat len = from == to ? Rat(1) : ccw_dist(from, to);
    for (int q = 1; q <= 3; ++q)
      mids.push_back(ccw_advance(from, len * q / 4));
  }
  size_t m = mids.size();
  // phi'(x1,x2,x3;z) = (/\_i Sep(x1,x2,x3,z_i)) /\ Sep(x2,z1,z2,z3)
//                      /\ Sep(x1,x3,z1,z3);
  // phi'' is the disjunction over cyclic shifts of x.  Precompute the
  // per-witness-point Sep filter for all six shifts.
  std::array<CyclicVariant, 6> vars{
      CyclicVariant{a[0], a[1], a[2]}, CyclicVariant{a[1], a[2], a[0]},
      CyclicVariant{a[2], a[0], a[1]}, CyclicVariant{b[0], b[1], b[2]},
      CyclicVariant{b[1], b[2], b[0]}, CyclicVariant{b[2], b[0], b[1]}};
  std::array<std::vector<bool>, 6> pass;
  for (int v = 0; v < 6; ++v) {
    pass[v].resize(m);
    for (size_t j = 0; j < m; ++j)
      pass[v][j] = sep(vars[v].x1, vars[v].x2, vars[v].x3, mids[j]);
  }
  auto variant_ok = [&](int v, size_t i, size_t j, size_t k) {
    if (!pass[v][i] || !pass[v][j] || !pass[v][k]) return false;
    return sep(vars[v].x2, mids[i], mids[j], mids[k]) &&
           sep(vars[v].x1, vars[v].x3, mids[i], mids[k]);
  };
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k) {
        if (i == j || j == k || i == k) continue;
        bool a_ok = variant_ok(0, i, j, k) || variant_ok(1, i, j, k) ||
                    variant_ok(2, i, j, k);
        if (!a_ok) continue;
        if (variant_ok(3, i, j, k) || variant_ok(4, i, j, k) ||
            variant_ok(5, i, j, k))
          return true;
      }
  return false;
}

}  // namespace ordrecon
