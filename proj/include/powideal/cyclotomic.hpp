#pragma once

// Exact arithmetic in Q(xi), xi a primitive k-th root of unity, realized as
// Q[x] / Phi_k(x) with rational coefficients.

#include <powideal/numerics.hpp>

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace powideal {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// The k-th cyclotomic polynomial: (x^k - 1) divided by Phi_j for every proper divisor j of k.
inline UniPoly cyclotomic_poly(long k) {
  if (k < 1) throw std::invalid_argument("cyclotomic_poly: k must be >= 1");
  UniPoly p = UniPoly::monomial(1, static_cast<std::size_t>(k)) - UniPoly{1};
  for (long j = 1; j < k; ++j) {
    if (k % j) continue;
    auto [q, r] = divmod_monic(p, cyclotomic_poly(j));
    if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
    p = std::move(q);
  }
  return p;
}

class CycNumber;

/// Context for one k: the modulus Phi_k and the reduction of x^e for
/// deg(Phi_k) <= e < 2 deg(Phi_k). Instances live for the whole program.
class CyclotomicField {
 public:
  static const CyclotomicField& get(long k) {
    static std::mutex mutex;
    static std::map<long, std::unique_ptr<CyclotomicField>> fields;
    std::lock_guard lock(mutex);
    auto& slot = fields[k];
    if (!slot) slot.reset(new CyclotomicField(k));
    return *slot;
  }

  long k() const { return k_; }
  /// Degree of the extension, phi(k).
  std::size_t degree() const { return degree_; }
  const UniPoly& modulus() const { return modulus_; }
  /// Coefficients of x^e reduced mod Phi_k, for degree() <= e <= 2 degree() - 2.
  const std::vector<Rational>& high_power(std::size_t e) const { return high_powers_[e - degree_]; }

  CycNumber zero() const;
  CycNumber one() const;
  CycNumber from_integer(const BigInt& c) const;
  /// xi^e for any integer e.
  CycNumber xi_pow(long e) const;

 private:
  explicit CyclotomicField(long k);

  long k_;
  std::size_t degree_;
  UniPoly modulus_;
  std::vector<std::vector<Rational>> high_powers_;
  std::vector<std::vector<Rational>> xi_powers_;  // xi^0 .. xi^{k-1}
};

class CycNumber {
 public:
  CycNumber(const CyclotomicField& field, std::vector<Rational> coeffs)
      : field_(&field), c_(std::move(coeffs)) {
    if (c_.size() != field.degree()) throw std::invalid_argument("CycNumber: wrong coefficient count");
  }

  const CyclotomicField& field() const { return *field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend bool is_zero(const CycNumber& a) {
    for (const auto& q : a.c_)
      if (sgn(q) != 0) return false;
    return true;
  }

  CycNumber& operator+=(const CycNumber& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycNumber& operator-=(const CycNumber& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycNumber& operator*=(const Rational& q) {
    for (auto& c : c_) c *= q;
    return *this;
  }

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator-(CycNumber a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend CycNumber operator*(CycNumber a, const Rational& q) { return a *= q; }

  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    a.check(b);
    const std::size_t m = a.c_.size();
    std::vector<Rational> prod(2 * m - 1);
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + m);
    for (std::size_t e = m; e < prod.size(); ++e) {
      if (sgn(prod[e]) == 0) continue;
      const auto& red = a.field_->high_power(e);
      for (std::size_t i = 0; i < m; ++i) out[i] += prod[e] * red[i];
    }
    return CycNumber(*a.field_, std::move(out));
  }
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_k.
  CycNumber inverse() const;

  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CycNumber& a) {
    bool any = false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      os << (any && sgn(a.c_[i]) > 0 ? "+" : "") << a.c_[i];
      if (i) os << "*xi^" << i;
      any = true;
    }
    if (!any) os << '0';
    return os;
  }

 private:
  void check(const CycNumber& o) const {
    if (field_ != o.field_) throw std::invalid_argument("CycNumber: mixing different fields");
  }

  const CyclotomicField* field_;
  std::vector<Rational> c_;
};

namespace detail {

using QPoly = std::vector<Rational>;  // index = power, trimmed

inline void qtrim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline QPoly qsub_mul(const QPoly& a, const QPoly& b, const QPoly& c) {  // a - b*c
  QPoly r = a;
  if (!b.empty() && !c.empty()) {
    if (r.size() < b.size() + c.size() - 1) r.resize(b.size() + c.size() - 1);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) r[i + j] -= b[i] * c[j];
  }
  qtrim(r);
  return r;
}

inline std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    qtrim(a);
  }
  qtrim(q);
  return {q, a};
}

}  // namespace detail

inline CyclotomicField::CyclotomicField(long k) : k_(k), modulus_(cyclotomic_poly(k)) {
  degree_ = static_cast<std::size_t>(modulus_.degree());
  // Multiplication by x on residues, using x^degree = -(lower terms of Phi).
  auto times_x = [this](std::vector<Rational>& v) {
    Rational top = v.back();
    for (std::size_t i = degree_; i-- > 1;) v[i] = v[i - 1];
    v[0] = 0;
    for (std::size_t i = 0; i < degree_; ++i) v[i] -= top * Rational(modulus_[i]);
  };
  std::vector<Rational> p(degree_);
  p[0] = 1;
  for (std::size_t e = 0; e + 1 < 2 * degree_; ++e) {
    if (e >= degree_) high_powers_.push_back(p);
    times_x(p);
  }
  p.assign(degree_, Rational(0));
  p[0] = 1;
  for (long e = 0; e < k; ++e) {
    xi_powers_.push_back(p);
    times_x(p);
  }
}

inline CycNumber CyclotomicField::zero() const { return CycNumber(*this, std::vector<Rational>(degree_)); }

inline CycNumber CyclotomicField::one() const { return from_integer(1); }

inline CycNumber CyclotomicField::from_integer(const BigInt& c) const {
  std::vector<Rational> v(degree_);
  v[0] = Rational(c);
  return CycNumber(*this, std::move(v));
}

inline CycNumber CyclotomicField::xi_pow(long e) const {
  const long r = ((e % k_) + k_) % k_;
  return CycNumber(*this, xi_powers_[r]);
}

inline CycNumber CycNumber::inverse() const {
  if (is_zero(*this)) throw std::domain_error("CycNumber: division by zero");
  using detail::QPoly;
  QPoly modq;
  for (const auto& c : field_->modulus().coeffs()) modq.emplace_back(c);
  QPoly a = c_;
  detail::qtrim(a);
  // Invariant: s_i * a == r_i (mod Phi)
  QPoly r0 = modq, r1 = a, s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = detail::qdivmod(r0, r1);
    QPoly s2 = detail::qsub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi is irreducible and a != 0 mod Phi.
  if (r0.size() != 1) throw std::logic_error("CycNumber: modulus not irreducible");
  Rational scale = 1 / r0[0];
  std::vector<Rational> out(field_->degree());
  auto [_, red] = detail::qdivmod(s0, modq);
  for (std::size_t i = 0; i < red.size(); ++i) out[i] = red[i] * scale;
  return CycNumber(*field_, std::move(out));
}

}  // namespace powideal
