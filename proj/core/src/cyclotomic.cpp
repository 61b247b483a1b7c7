#include "pillowcase/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pillowcase/errors.hpp"

namespace pillowcase {

namespace {

using Poly = std::vector<mpq_class>;  // coefficient i of x^i; no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// division by a monic divisor; returns quotient, remainder must vanish when exact
Poly poly_div_exact(Poly num, const Poly& den) {
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpq_class(0));
  while (num.size() >= den.size() && !num.empty()) {
    trim(num);
    if (num.size() < den.size()) break;
    mpq_class f = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = f;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
  }
  trim(num);
  if (!num.empty()) throw ConsistencyError("cyclotomic polynomial division not exact");
  return q;
}

// Phi_n by recursive exact division of x^n - 1 by all proper-divisor Phi_d.
Poly cyclotomic_poly(long long n) {
  Poly num(static_cast<std::size_t>(n) + 1, mpq_class(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long long d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic_poly(d));
  return num;
}

}  // namespace

CycField::CycField(long long N) : N_(N) {
  if (N < 1) throw InvalidInput("cyclotomic modulus must be >= 1");
  min_poly_ = cyclotomic_poly(N);
  degree_ = static_cast<int>(min_poly_.size()) - 1;
  // power_table_[k] = zeta^k reduced mod Phi_N, for k in [0, N)
  power_table_.assign(static_cast<std::size_t>(N), {});
  std::vector<mpq_class> cur(static_cast<std::size_t>(degree_), mpq_class(0));
  cur[0] = 1;
  for (long long k = 0; k < N; ++k) {
    power_table_[static_cast<std::size_t>(k)] = cur;
    // multiply by zeta
    std::vector<mpq_class> nxt(static_cast<std::size_t>(degree_), mpq_class(0));
    mpq_class top = cur[static_cast<std::size_t>(degree_ - 1)];
    for (int i = degree_ - 1; i > 0; --i) nxt[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    nxt[0] = 0;
    if (top != 0)
      for (int i = 0; i < degree_; ++i)
        nxt[static_cast<std::size_t>(i)] -= top * min_poly_[static_cast<std::size_t>(i)];
    cur = std::move(nxt);
  }
}

std::shared_ptr<const CycField> CycField::make(long long N) {
  return std::shared_ptr<const CycField>(new CycField(N));
}

const std::vector<mpq_class>& CycField::power(long long k) const {
  k %= N_;
  if (k < 0) k += N_;
  return power_table_[static_cast<std::size_t>(k)];
}

Cyc CycField::zero() const {
  return Cyc(shared_from_this(), std::vector<mpq_class>(static_cast<std::size_t>(degree_), mpq_class(0)));
}

Cyc CycField::one() const { return integer(1); }

Cyc CycField::integer(long long n) const { return rational(mpq_class(static_cast<long>(n))); }

Cyc CycField::rational(const mpq_class& q) const {
  std::vector<mpq_class> c(static_cast<std::size_t>(degree_), mpq_class(0));
  c[0] = q;
  return Cyc(shared_from_this(), std::move(c));
}

Cyc CycField::rational(const Frac& f) const {
  return rational(mpq_class(static_cast<long>(f.num), static_cast<long>(f.den)));
}

Cyc CycField::root_of_unity(const Turn& t) const {
  if (N_ % t.order() != 0)
    throw InvalidInput("root_of_unity: denominator " + std::to_string(t.order()) +
                       " does not divide field modulus " + std::to_string(N_));
  long long k = t.value.num * (N_ / t.value.den);
  return Cyc(shared_from_this(), power(k));
}

Cyc CycField::imaginary_unit() const {
  if (N_ % 4 != 0) throw DomainError("imaginary unit needs 4 | N");
  return Cyc(shared_from_this(), power(N_ / 4));
}

bool Cyc::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyc::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyc Cyc::operator+(const Cyc& o) const {
  std::vector<mpq_class> r(c_);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return Cyc(field_, std::move(r));
}

Cyc Cyc::operator-(const Cyc& o) const {
  std::vector<mpq_class> r(c_);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return Cyc(field_, std::move(r));
}

Cyc Cyc::operator-() const {
  std::vector<mpq_class> r(c_);
  for (auto& v : r) v = -v;
  return Cyc(field_, std::move(r));
}

Cyc Cyc::operator*(const Cyc& o) const {
  const int deg = field_->degree();
  std::vector<mpq_class> prod(static_cast<std::size_t>(2 * deg - 1), mpq_class(0));
  for (int i = 0; i < deg; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.c_[static_cast<std::size_t>(j)] == 0) continue;
      prod[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
  }
  // reduce powers >= deg via the power table
  std::vector<mpq_class> r(prod.begin(), prod.begin() + deg);
  for (int k = deg; k < 2 * deg - 1; ++k) {
    if (prod[static_cast<std::size_t>(k)] == 0) continue;
    const auto& zk = field_->power(k % field_->modulus());
    for (int i = 0; i < deg; ++i) r[static_cast<std::size_t>(i)] += prod[static_cast<std::size_t>(k)] * zk[static_cast<std::size_t>(i)];
  }
  return Cyc(field_, std::move(r));
}

Cyc Cyc::conj() const {
  // zeta^j -> zeta^{N-j}
  Cyc out = field_->zero();
  const int deg = field_->degree();
  for (int j = 0; j < deg; ++j) {
    if (c_[static_cast<std::size_t>(j)] == 0) continue;
    const auto& z = field_->power(field_->modulus() - j);
    for (int i = 0; i < deg; ++i) out.c_[static_cast<std::size_t>(i)] += c_[static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(i)];
  }
  return out;
}

Cyc Cyc::inv() const {
  if (is_zero()) throw DomainError("inverse of zero cyclotomic element");
  // extended Euclid in Q[x]: track s with s*this + t*Phi = r
  Poly r_prev = field_->min_poly_;
  Poly r(c_.begin(), c_.end());
  trim(r);
  Poly s_prev{};          // coefficient of `this` in r_prev
  Poly s{mpq_class(1)};   // coefficient of `this` in r
  while (r.size() > 1) {
    Poly rem = r_prev;
    Poly q(rem.size() >= r.size() ? rem.size() - r.size() + 1 : 1, mpq_class(0));
    while (rem.size() >= r.size()) {
      mpq_class f = rem.back() / r.back();
      std::size_t shift = rem.size() - r.size();
      q[shift] += f;
      for (std::size_t i = 0; i < r.size(); ++i) rem[shift + i] -= f * r[i];
      trim(rem);
      if (rem.empty()) break;
    }
    if (rem.empty())
      throw ConsistencyError("cyclotomic inverse: nonzero element shares a factor with Phi_N");
    Poly qs = poly_mul(q, s);
    Poly s_new = s_prev;
    s_new.resize(std::max(s_new.size(), qs.size()), mpq_class(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s_new[i] -= qs[i];
    trim(s_new);
    r_prev = std::move(r);
    r = std::move(rem);
    s_prev = std::move(s);
    s = std::move(s_new);
  }
  // r = constant c, so inverse = s / c, reduced into the power basis
  const mpq_class cconst = r.at(0);
  Cyc acc = field_->zero();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) continue;
    const auto& z = field_->power(static_cast<long long>(i));
    for (int j = 0; j < field_->degree(); ++j)
      acc.c_[static_cast<std::size_t>(j)] += (s[i] / cconst) * z[static_cast<std::size_t>(j)];
  }
  return acc;
}

bool Cyc::operator==(const Cyc& o) const { return c_ == o.c_; }

std::complex<double> Cyc::to_complex() const {
  const double two_pi = 2.0 * std::numbers::pi;
  std::complex<double> z = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double arg = two_pi * static_cast<double>(j) / static_cast<double>(field_->modulus());
    z += c_[j].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return z;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!first) os << " + ";
    os << c_[j].get_str();
    if (j > 0) os << "*z^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace pillowcase
