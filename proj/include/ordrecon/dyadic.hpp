#pragma once

#include <vector>

#include "ordrecon/plgroup.hpp"

namespace ordrecon {

struct UnsupportedWitness : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cut points of the standard dyadic decomposition of [a,b]: a strictly
// increasing chain a = c_0 < ... < c_m = b where every piece is a standard
// dyadic interval [k/2^n, (k+1)/2^n].  Requires dyadic a < b.
std::vector<Rat> dyadic_standard_cuts(const Rat& a, const Rat& b);

// Increasing PL bijection [a,b] -> [c,d] with dyadic breakpoints and
// power-of-two slopes, extended affinely outside.  Requires dyadic data.
PLMap dyadic_interval_map(const Rat& a, const Rat& b, const Rat& c,
                          const Rat& d);

// g with g(src_i) = dst_i and supp(g) inside `frame` (trimmed to a bounded
// dyadic interval when infinite).  src and dst must be strictly increasing
// dyadic tuples of equal length lying inside the frame.
PLMap dyadic_point_witness(const std::vector<Rat>& src,
                           const std::vector<Rat>& dst,
                           const LinInterval& frame = LinInterval::whole_line());

// Order-reversing dyadic map with g(src_i) = dst_i; src increasing, dst
// decreasing.
PLMap dyadic_point_witness_reversing(const std::vector<Rat>& src,
                                     const std::vector<Rat>& dst);

// Orientation-preserving dyadic circle map with g(src_i) = dst_i.
// Both tuples must be counterclockwise (Cr) and dyadic.
PLCircleMap dyadic_circle_point_witness(const std::vector<CirclePoint>& src,
                                        const std::vector<CirclePoint>& dst);

// Orientation-reversing analogue: src counterclockwise, dst clockwise.
PLCircleMap dyadic_circle_point_witness_reversing(
    const std::vector<CirclePoint>& src, const std::vector<CirclePoint>& dst);

// Interval-transitivity witness: g(I_i) meets J_i for ordered dyadic
// interval tuples I_1 < ... < I_n and J_1 < ... < J_n.
PLMap dyadic_interval_witness(const std::vector<LinInterval>& is,
                              const std::vector<LinInterval>& js);

// Circular analogue for Crs-ordered dyadic arc tuples.
PLCircleMap dyadic_circle_interval_witness(const std::vector<CircInterval>& is,
                                           const std::vector<CircInterval>& js);

// Dyadic point inside an interval / arc.
Rat dyadic_inside(const LinInterval& iv);
CirclePoint dyadic_inside(const CircInterval& arc);

}  // namespace ordrecon
