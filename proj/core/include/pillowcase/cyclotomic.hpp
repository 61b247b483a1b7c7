#pragma once

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "pillowcase/rational.hpp"

namespace pillowcase {

class Cyc;

/// The cyclotomic field Q(zeta_N). Elements are rational-coefficient polynomial
/// residues modulo the N-th cyclotomic polynomial, computed once here by exact
/// integer polynomial division of x^N - 1 by the proper-divisor factors.
class CycField : public std::enable_shared_from_this<CycField> {
 public:
  static std::shared_ptr<const CycField> make(long long N);

  long long modulus() const { return N_; }
  int degree() const { return degree_; }

  Cyc zero() const;
  Cyc one() const;
  Cyc integer(long long n) const;
  Cyc rational(const mpq_class& q) const;
  Cyc rational(const Frac& f) const;
  /// e^{2 pi i t}; the denominator of t must divide N.
  Cyc root_of_unity(const Turn& t) const;
  /// The imaginary unit (requires 4 | N, which make() arranges for callers that
  /// pass lcm(exponent, 4)).
  Cyc imaginary_unit() const;

  /// zeta^k reduced, for any integer k.
  const std::vector<mpq_class>& power(long long k) const;

 private:
  explicit CycField(long long N);
  long long N_ = 1;
  int degree_ = 1;
  std::vector<mpq_class> min_poly_;                 // monic Phi_N, degree_ + 1 coeffs
  std::vector<std::vector<mpq_class>> power_table_;  // zeta^k reduced, k in [0, N)
  friend class Cyc;
};

/// Exact element of a cyclotomic field. All arithmetic reduces modulo Phi_N,
/// so equality is coefficient equality. Conjugation is zeta -> zeta^{N-1}.
class Cyc {
 public:
  Cyc() = default;

  const CycField& field() const { return *field_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc conj() const;
  /// Multiplicative inverse; throws DomainError on zero.
  Cyc inv() const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  Cyc(std::shared_ptr<const CycField> f, std::vector<mpq_class> coeffs)
      : field_(std::move(f)), c_(std::move(coeffs)) {}
  std::shared_ptr<const CycField> field_;
  std::vector<mpq_class> c_;  // size degree()
  friend class CycField;
};

}  // namespace pillowcase
