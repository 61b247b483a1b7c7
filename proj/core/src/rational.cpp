#include "pillowcase/rational.hpp"

#include <numeric>

#include "pillowcase/errors.hpp"

namespace pillowcase {

Frac::Frac(long long n, long long d) {
  if (d == 0) throw InvalidInput("fraction with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Frac Frac::operator+(const Frac& o) const {
  return Frac(num * o.den + o.num * den, den * o.den);
}

Frac Frac::operator-(const Frac& o) const {
  return Frac(num * o.den - o.num * den, den * o.den);
}

Frac Frac::operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }

std::strong_ordering Frac::operator<=>(const Frac& o) const {
  long long lhs = num * o.den;
  long long rhs = o.num * den;
  return lhs <=> rhs;
}

std::string Frac::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Turn Turn::of(long long p, long long q) { return of(Frac(p, q)); }

Turn Turn::of(const Frac& f) {
  long long p = f.num % f.den;
  if (p < 0) p += f.den;
  Turn t;
  t.value = Frac(p, f.den);
  return t;
}

Frac turn_sum(const std::vector<Turn>& ts) {
  Frac s = Frac::integer(0);
  for (const Turn& t : ts) s = s + t.value;
  return s;
}

Turn parse_turn(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Turn::of(std::stoll(text), 1);
    long long p = std::stoll(text.substr(0, slash));
    long long q = std::stoll(text.substr(slash + 1));
    return Turn::of(p, q);
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse fraction '" + text + "'");
  }
}

}  // namespace pillowcase
