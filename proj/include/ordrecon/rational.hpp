#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace ordrecon {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long n, long long d = 1) { return Rat(n, d); }

// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& r);

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int floor_rat(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

// Fractional part in [0,1).
inline Rat mod1(const Rat& r) { return r - Rat(floor_rat(r)); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// True iff r = a/2^k in lowest terms.
bool is_dyadic(const Rat& r);

// Largest e with 2^e <= r (r > 0 required).
int floor_log2(const Rat& r);

inline Rat pow2(int e) {
  return e >= 0 ? Rat(Int(1) << e) : Rat(1, Int(1) << (-e));
}

// Exponent k when r == 2^k, nullopt otherwise.
std::optional<int> log2_exact(const Rat& r);

}  // namespace ordrecon
