#pragma once

// Exact combinatorial primitives and univariate integer polynomials.
//
// Every quantity is an arbitrary-precision integer (GMP). Binomials follow the
// combinatorial convention: C(a,b) = 0 whenever b < 0, a < 0 or b > a, so
// summation loops may run over index ranges that are wider than the support.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace powideal {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt from_decimal(const std::string& s) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  return v;
}

namespace detail {

// Pascal triangle grown row by row on demand. Readers take a shared lock;
// growth takes the unique lock. Rows are never mutated once appended.
class BinomialTable {
 public:
  static constexpr long kMaxCachedRow = 4096;

  static BinomialTable& instance() {
    static BinomialTable table;
    return table;
  }

  BigInt get(long a, long b) {
    {
      std::shared_lock lock(mutex_);
      if (a < static_cast<long>(rows_.size())) return rows_[a][b];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<long>(rows_.size()) <= a) {
      const auto& prev = rows_.back();
      std::vector<BigInt> row(prev.size() + 1);
      row.front() = 1;
      row.back() = 1;
      for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
      rows_.push_back(std::move(row));
    }
    return rows_[a][b];
  }

 private:
  BinomialTable() { rows_.push_back({BigInt(1)}); }

  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace detail

/// Binomial coefficient C(a,b); zero outside 0 <= b <= a.
inline BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (a <= detail::BinomialTable::kMaxCachedRow) return detail::BinomialTable::instance().get(a, b);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(std::min(b, a - b)));
  return r;
}

/// Multinomial coefficient total! / prod(parts!). Zero if any part is
/// negative or the parts do not sum to total.
inline BigInt multinomial(long total, std::span<const long> parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != total || total < 0) return 0;
  BigInt r = 1;
  long acc = 0;
  for (long p : parts) {
    acc += p;
    r *= binomial(acc, p);
  }
  return r;
}

inline BigInt multinomial(long total, std::initializer_list<long> parts) {
  return multinomial(total, std::span<const long>(parts.begin(), parts.size()));
}

inline BigInt multinomial(long total, const std::vector<long>& parts) {
  return multinomial(total, std::span<const long>(parts));
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Dense univariate polynomial with big-integer coefficients; index = power of t.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<long> cs) {
    for (long c : cs) coeffs_.emplace_back(c);
    trim();
  }
  explicit UniPoly(std::vector<BigInt> cs) : coeffs_(std::move(cs)) { trim(); }

  static UniPoly monomial(const BigInt& c, std::size_t power) {
    std::vector<BigInt> cs(power + 1);
    cs[power] = c;
    return UniPoly(std::move(cs));
  }

  /// (1 - t)^e
  static UniPoly one_minus_t_pow(std::size_t e) {
    std::vector<BigInt> cs(e + 1);
    for (std::size_t i = 0; i <= e; ++i) {
      cs[i] = binomial(static_cast<long>(e), static_cast<long>(i));
      if (i % 2 == 1) cs[i] = -cs[i];
    }
    return UniPoly(std::move(cs));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  BigInt evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(r));
  }

  /// Multiplies by t^m.
  UniPoly shifted(std::size_t m) const {
    if (is_zero()) return {};
    std::vector<BigInt> r(m, BigInt(0));
    r.insert(r.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(std::move(r));
  }

  /// Drops every term of degree > max_degree.
  UniPoly truncated(std::size_t max_degree) const {
    if (coeffs_.size() <= max_degree + 1) return *this;
    return UniPoly(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) os << (i ? "," : "") << p.coeffs_[i];
    return os << ']';
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline UniPoly poly_add(const UniPoly& a, const UniPoly& b) { return a + b; }
inline UniPoly poly_mul(const UniPoly& a, const UniPoly& b) { return a * b; }
inline UniPoly poly_shift(const UniPoly& a, std::size_t m) { return a.shifted(m); }

/// Quotient and remainder of a by a monic divisor.
inline std::pair<UniPoly, UniPoly> divmod_monic(const UniPoly& a, const UniPoly& divisor) {
  if (divisor.is_zero() || divisor.coeffs().back() != 1)
    throw std::invalid_argument("divmod_monic: divisor must be monic");
  if (a.degree() < divisor.degree()) return {UniPoly{}, a};
  std::vector<BigInt> rem = a.coeffs();
  const auto& dv = divisor.coeffs();
  const std::size_t dd = dv.size() - 1;
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const BigInt c = rem[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * dv[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

/// Coefficients of numerator / (1 - t)^denom_exponent for degrees 0..up_to.
inline std::vector<BigInt> expand_series(const UniPoly& numerator, long denom_exponent, long up_to) {
  if (denom_exponent < 1) throw std::invalid_argument("expand_series: denom_exponent must be >= 1");
  if (up_to < 0) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(up_to) + 1);
  const long r = denom_exponent - 1;
  const auto& cs = numerator.coeffs();
  for (long m = 0; m <= up_to; ++m) {
    BigInt acc = 0;
    const long top = std::min<long>(m, static_cast<long>(cs.size()) - 1);
    for (long s = 0; s <= top; ++s) {
      if (cs[s] != 0) acc += cs[s] * binomial(r + m - s, r);
    }
    out[m] = std::move(acc);
  }
  return out;
}

/// Divides by (1 - t) if it is a factor; returns false (leaving p alone) otherwise.
inline bool divide_by_one_minus_t(UniPoly& p) {
  if (p.is_zero()) return true;
  if (p.evaluate(1) != 0) return false;
  // p = (1 - t) q  =>  q_i = sum_{s<=i} p_s
  const auto& cs = p.coeffs();
  std::vector<BigInt> q(cs.size() - 1);
  BigInt acc = 0;
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    acc += cs[i];
    q[i] = acc;
  }
  p = UniPoly(std::move(q));
  return true;
}

/// Order of vanishing at t = 1 and the value of p / (1-t)^order at t = 1.
struct VanishingAtOne {
  long order;
  BigInt residual;
};

inline VanishingAtOne vanishing_at_one(UniPoly p) {
  if (p.is_zero()) throw std::invalid_argument("vanishing_at_one: zero polynomial");
  long order = 0;
  while (divide_by_one_minus_t(p)) ++order;
  return {order, p.evaluate(1)};
}

}  // namespace powideal
