#include "ordrecon/rational.hpp"

namespace ordrecon {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string rat_str(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

bool is_dyadic(const Rat& r) {
  Int d = rat_den(r);
  while (d % 2 == 0) d /= 2;
  return d == 1;
}

int floor_log2(const Rat& r) {
  if (r <= 0) throw std::invalid_argument("floor_log2 needs positive input");
  int e = 0;
  Rat x = r;
  while (x >= 2) {
    x /= 2;
    ++e;
  }
  while (x < 1) {
    x *= 2;
    --e;
  }
  return e;
}

std::optional<int> log2_exact(const Rat& r) {
  if (r <= 0) return std::nullopt;
  int e = floor_log2(r);
  return pow2(e) == r ? std::optional<int>(e) : std::nullopt;
}

}  // namespace ordrecon
