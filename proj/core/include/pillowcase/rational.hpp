#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pillowcase {

/// Reduced fraction with positive denominator. Denominators in this project stay
/// tiny (they divide a group exponent), so 64-bit arithmetic is plenty.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n, long long d);
  static Frac integer(long long n) { return Frac(n, 1); }

  Frac operator+(const Frac& o) const;
  Frac operator-(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  Frac operator-() const { return Frac(-num, den); }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  std::strong_ordering operator<=>(const Frac& o) const;

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }
  std::string str() const;
};

/// Angle argument divided by 2*pi: a rational in [0,1), reduced.
/// Addition and negation are mod 1.
struct Turn {
  Frac value;  // 0 <= value < 1, reduced

  Turn() = default;
  static Turn of(long long p, long long q);
  static Turn of(const Frac& f);

  Turn operator+(const Turn& o) const { return of(value + o.value); }
  Turn operator-() const { return of(-value); }
  Turn operator-(const Turn& o) const { return *this + (-o); }
  bool operator==(const Turn& o) const { return value == o.value; }
  std::strong_ordering operator<=>(const Turn& o) const { return value <=> o.value; }

  bool is_zero() const { return value.is_zero(); }
  /// Conjugate angle 1 - t (mod 1).
  Turn conj() const { return -*this; }
  /// Multiplicative order of e^{2 pi i t}, i.e. the reduced denominator.
  long long order() const { return value.den; }
  std::string str() const { return value.is_zero() ? "0/1" : value.str(); }
};

/// Exact sum of turns as a Frac (not reduced mod 1).
Frac turn_sum(const std::vector<Turn>& ts);

/// Parses "p/q" (or "p") into a turn; throws InvalidInput on garbage.
Turn parse_turn(const std::string& text);

}  // namespace pillowcase
