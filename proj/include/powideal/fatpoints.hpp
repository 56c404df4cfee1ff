#pragma once

// Schemes of d-fat points supported on the k^n points [1 : xi^g1 : ... : xi^gn]
// of P^n, and the Macaulay-duality bridge back to the power ideals I_{n,k,d}.
//
// Coordinates: the base coordinate is x0 and the generators of the reduced
// ideal are Q_j = x_j^k - x_0^k for j = 1..n.

#include <powideal/grading.hpp>
#include <powideal/numerics.hpp>
#include <powideal/sparse_poly.hpp>

#include <stdexcept>
#include <vector>

namespace powideal {

struct BettiEntry {
  long homological_degree;  // i
  long shift;               // kd + k(i-1)
  BigInt value;             // beta_i
};

struct BettiTable {
  long n, k, d;
  std::vector<BettiEntry> entries;
};

namespace detail {
inline void check_fat_params(long n, long k, long d) {
  if (n < 0) throw std::invalid_argument("fat points: n must be >= 0");
  if (k < 2) throw std::invalid_argument("fat points: k must be >= 2");
  if (d < 1) throw std::invalid_argument("fat points: d must be >= 1");
}
}  // namespace detail

/// Graded Betti numbers of S / I_k^{(d)}; the resolution is pure with
/// beta_i = C(d+i-2, i-1) * C(d+n-1, n-i) at shift kd + k(i-1). Empty for n = 0.
inline BettiTable betti(long n, long k, long d) {
  detail::check_fat_params(n, k, d);
  BettiTable t{n, k, d, {}};
  for (long i = 1; i <= n; ++i)
    t.entries.push_back({i, k * d + k * (i - 1), binomial(d + i - 2, i - 1) * binomial(d + n - 1, n - i)});
  return t;
}

struct FatPointSeries {
  UniPoly numerator;
  long denom_exponent;  // n + 1
};

/// Hilbert series (1 + sum (-1)^i beta_i t^{kd+k(i-1)}) / (1-t)^{n+1}.
inline FatPointSeries fat_series(long n, long k, long d) {
  const auto table = betti(n, k, d);
  UniPoly num{1};
  for (const auto& b : table.entries) {
    num += UniPoly::monomial(b.homological_degree % 2 ? BigInt(-b.value) : b.value,
                             static_cast<std::size_t>(b.shift));
  }
  return {num, n + 1};
}

/// Degree of the scheme, k^n * C(d+n-1, n).
inline BigInt multiplicity(long n, long k, long d) {
  detail::check_fat_params(n, k, d);
  return ipow(BigInt(k), static_cast<unsigned long>(n)) * binomial(d + n - 1, n);
}

/// Degree from which the Hilbert function is constant: the top shift minus n
/// (0 for n = 0).
inline long fat_regularity_index(long n, long k, long d) {
  detail::check_fat_params(n, k, d);
  if (n == 0) return 0;
  return std::max<long>(0, k * d + k * (n - 1) - n);
}

/// HF(S / I_k^{(d)}, m), read off the series.
inline BigInt fat_hf(long n, long k, long d, long m) {
  if (m < 0) return 0;
  const auto s = fat_series(n, k, d);
  return expand_series(s.numerator, s.denom_exponent, m).back();
}

/// HF(S / I_k^{(d)}, m) for m = 0..up_to.
inline std::vector<BigInt> fat_hf_table(long n, long k, long d, long up_to) {
  const auto s = fat_series(n, k, d);
  return expand_series(s.numerator, s.denom_exponent, up_to);
}

/// The C(d+n-1, n-1) generators prod_j (x_j^k - x_0^k)^{i_j}, sum i_j = d,
/// ordered by decreasing exponent vector (i_1, ..., i_n).
inline std::vector<SparseIntPoly> fat_generators(long n, long k, long d) {
  detail::check_fat_params(n, k, d);
  const std::size_t vars = static_cast<std::size_t>(n + 1);
  std::vector<SparseIntPoly> q;
  for (long j = 1; j <= n; ++j) {
    q.push_back(SparseIntPoly::variable_power(vars, j, k) - SparseIntPoly::variable_power(vars, 0, k));
  }
  // powers Q_j^e for e = 0..d
  std::vector<std::vector<SparseIntPoly>> powers(n);
  for (long j = 0; j < n; ++j) {
    powers[j].push_back(SparseIntPoly::constant(vars, 1));
    for (long e = 1; e <= d; ++e) powers[j].push_back(powers[j].back() * q[j]);
  }
  std::vector<SparseIntPoly> out;
  if (n == 0) return out;
  for (const auto& idx : monomials_of_degree(static_cast<std::size_t>(n), d)) {
    SparseIntPoly g = SparseIntPoly::constant(vars, 1);
    for (long j = 0; j < n; ++j)
      if (idx[j]) g = g * powers[j][idx[j]];
    out.push_back(std::move(g));
  }
  return out;
}

namespace detail {
inline void check_j(const Params& p, long j) {
  if (j < 0 || j > p.d() - 2)
    throw std::invalid_argument("j must lie in 0..d-2 (got " + std::to_string(j) + " for d=" +
                                std::to_string(p.d()) + ")");
}

/// dim [I_k^{(s)}]_i with i = D + j, s = j + 1; valid for all j >= 0.
inline BigInt duality_value(const Params& p, long j) {
  const long i = p.D() + j;
  return binomial(p.n() + i, p.n()) - fat_hf(p.n(), p.k(), j + 1, i);
}
}  // namespace detail

/// HF(R_{n,k,d}; D+j) predicted by Macaulay duality: the dimension of the
/// fat-point ideal I_k^{(j+1)} in degree D+j.
inline BigInt duality_hf(const Params& p, long j) {
  detail::check_j(p, j);
  return detail::duality_value(p, j);
}

/// Closed form of duality_hf: the alternating Betti sum with the binomials
/// evaluated directly,
///   sum_{s=1..n, ks <= (k-1)(d-j)} (-1)^{s+1} C(n+(k-1)(d-j)-ks, n) C(j+s-1, s-1) C(j+n, n-s).
inline BigInt comp_formula(const Params& p, long j) {
  detail::check_j(p, j);
  const long n = p.n(), k = p.k(), span = (k - 1) * (p.d() - j);
  BigInt total = 0;
  for (long s = 1; s <= n; ++s) {
    if (k * s > span) continue;
    BigInt term = binomial(n + span - k * s, n) * binomial(j + s - 1, s - 1) * binomial(j + n, n - s);
    if (s % 2) total += term;
    else total -= term;
  }
  return total;
}

}  // namespace powideal
