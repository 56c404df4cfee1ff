#pragma once

// The Z_k^{n+1} multicyclic grading on C[x_0..x_n]: a monomial x^a sits in
// total degree |a| and multicyclic degree (a_0 mod k, ..., a_n mod k).

#include <powideal/numerics.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powideal {

/// The triple (n, k, d). n+1 variables, powers of degree D = (k-1)d.
class Params {
 public:
  Params(long n, long k, long d) : n_(n), k_(k), d_(d) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (d < 1) throw std::invalid_argument("d must be >= 1");
  }

  long n() const { return n_; }
  long k() const { return k_; }
  long d() const { return d_; }
  long vars() const { return n_ + 1; }
  long D() const { return (k_ - 1) * d_; }
  /// First degree in which the quotient is known to vanish.
  long kd() const { return k_ * d_; }

  friend bool operator==(const Params&, const Params&) = default;
  friend auto operator<=>(const Params&, const Params&) = default;

  std::string to_string() const {
    return "(n=" + std::to_string(n_) + ",k=" + std::to_string(k_) + ",d=" + std::to_string(d_) + ")";
  }

 private:
  long n_, k_, d_;
};

/// Element of Z_k^{n+1}, stored as representatives 0..k-1.
class Multicycle {
 public:
  Multicycle(long k, std::vector<long> entries) : k_(k), entries_(std::move(entries)) {
    if (k < 1) throw std::invalid_argument("Multicycle: modulus must be >= 1");
    if (entries_.empty()) throw std::invalid_argument("Multicycle: needs at least one entry");
    for (long e : entries_)
      if (e < 0 || e >= k) throw std::invalid_argument("Multicycle: entry out of range");
  }

  static Multicycle zero(long k, long length) { return Multicycle(k, std::vector<long>(length, 0)); }

  /// Residues of an exponent vector.
  static Multicycle of_exponents(long k, const std::vector<long>& exps) {
    std::vector<long> r(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) r[i] = ((exps[i] % k) + k) % k;
    return Multicycle(k, std::move(r));
  }

  long modulus() const { return k_; }
  std::size_t size() const { return entries_.size(); }
  long operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<long>& entries() const { return entries_; }
  bool is_zero() const {
    for (long e : entries_)
      if (e) return false;
    return true;
  }

  friend Multicycle operator+(const Multicycle& a, const Multicycle& b) {
    check_compatible(a, b);
    std::vector<long> r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % a.k_;
    return Multicycle(a.k_, std::move(r));
  }
  friend Multicycle operator-(const Multicycle& a, const Multicycle& b) {
    check_compatible(a, b);
    std::vector<long> r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ((a[i] - b[i]) % a.k_ + a.k_) % a.k_;
    return Multicycle(a.k_, std::move(r));
  }

  /// Scalar product of the representatives, as an ordinary integer.
  friend long dot(const Multicycle& a, const Multicycle& b) {
    check_compatible(a, b);
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  friend bool operator==(const Multicycle&, const Multicycle&) = default;
  friend auto operator<=>(const Multicycle&, const Multicycle&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) s += (i ? "," : "") + std::to_string(entries_[i]);
    return s + ")";
  }

 private:
  static void check_compatible(const Multicycle& a, const Multicycle& b) {
    if (a.k_ != b.k_ || a.size() != b.size()) throw std::invalid_argument("Multicycle: shape mismatch");
  }

  long k_;
  std::vector<long> entries_;
};

inline long weight(const Multicycle& m) {
  long s = 0;
  for (long e : m.entries()) s += e;
  return s;
}

inline std::vector<long> partition_vector(const Multicycle& m) {
  std::vector<long> part(m.modulus(), 0);
  for (long e : m.entries()) ++part[e];
  return part;
}

/// All of Z_k^{length} in lexicographic order.
inline std::vector<Multicycle> enumerate_multicycles(long k, long length) {
  std::vector<Multicycle> out;
  std::vector<long> cur(length, 0);
  while (true) {
    out.emplace_back(k, cur);
    long pos = length - 1;
    while (pos >= 0 && cur[pos] == k - 1) cur[pos--] = 0;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

/// True iff i - wt(g) is a nonnegative multiple of k, i.e. S_{i,g} != 0.
inline bool in_G(const Params& p, long i, const Multicycle& g) {
  const long r = i - weight(g);
  return r >= 0 && r % p.k() == 0;
}

/// dim S_{i,g}: C(n+j, n) when i - wt(g) = jk with j >= 0, else 0.
inline BigInt dim_graded_piece(const Params& p, long i, const Multicycle& g) {
  if (!in_G(p, i, g)) return 0;
  const long j = (i - weight(g)) / p.k();
  return binomial(p.n() + j, p.n());
}

/// N_h = number of multicycles in Z_k^{n+1} of weight h, h = 0..(k-1)(n+1).
class WeightCounts {
 public:
  WeightCounts(long n, long k) : n_(n), k_(k) {
    if (n < 0 || k < 2) throw std::invalid_argument("WeightCounts: need n >= 0, k >= 2");
    const long top = (k - 1) * (n + 1);
    counts_.reserve(top + 1);
    for (long h = 0; h <= top; ++h) {
      BigInt acc = 0;
      for (long s = 0; s <= h / k; ++s) {
        BigInt term = binomial(n + 1, s) * binomial(n + h - k * s, n);
        if (s % 2) acc -= term;
        else acc += term;
      }
      counts_.push_back(std::move(acc));
    }
  }

  long n() const { return n_; }
  long k() const { return k_; }
  long max_weight() const { return static_cast<long>(counts_.size()) - 1; }
  /// Zero outside 0..max_weight.
  BigInt operator[](long h) const {
    return (h < 0 || h > max_weight()) ? BigInt(0) : counts_[h];
  }
  const std::vector<BigInt>& values() const { return counts_; }

 private:
  long n_, k_;
  std::vector<BigInt> counts_;
};

/// Shared per-(n,k) cache of weight counts.
inline const WeightCounts& weight_counts(long n, long k) {
  static std::shared_mutex mutex;
  static std::map<std::pair<long, long>, std::unique_ptr<const WeightCounts>> cache;
  const auto key = std::make_pair(n, k);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto fresh = std::make_unique<const WeightCounts>(n, k);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(key, std::move(fresh));
  return *it->second;
}

/// Number of minimal generators of I_{n,k,d}: |G_{k,n,D}|, the multicycles
/// with wt <= D and wt = D mod k.
inline BigInt gens_count(const Params& p) {
  const auto& N = weight_counts(p.n(), p.k());
  BigInt total = 0;
  for (long h = p.D(); h >= 0; h -= p.k()) total += N[h];
  return total;
}

/// Same count by distributing residues over the variables: for each i and
/// each choice of how many coordinates equal 2..k-1, the remaining weight
/// D - ki is made up by coordinates equal to 1.
inline BigInt gens_count_by_partitions(const Params& p) {
  const long n1 = p.n() + 1, k = p.k(), D = p.D();
  BigInt total = 0;
  std::vector<long> nu(k >= 2 ? k - 2 : 0, 0);  // nu[j-2] = #coordinates equal to j, j = 2..k-1
  for (long i = 0; k * i <= D; ++i) {
    // odometer over nu with sum(nu) <= n+1
    std::fill(nu.begin(), nu.end(), 0);
    while (true) {
      long sum_nu = 0, sum_j_nu = 0;
      for (std::size_t t = 0; t < nu.size(); ++t) {
        sum_nu += nu[t];
        sum_j_nu += static_cast<long>(t + 2) * nu[t];
      }
      if (sum_nu <= n1) {
        const long ones = D - k * i - sum_j_nu;
        const long zeros = n1 - ones - sum_nu;
        std::vector<long> parts(nu.begin(), nu.end());
        parts.push_back(ones);
        parts.push_back(zeros);
        total += multinomial(n1, parts);
      }
      std::size_t pos = 0;
      while (pos < nu.size() && nu[pos] == n1) nu[pos++] = 0;
      if (pos == nu.size()) break;
      ++nu[pos];
    }
  }
  return total;
}

/// For k = 2: the 2^n power generators are linearly independent iff n <= d.
/// The count sum_i C(n+1, d-2i) reaches 2^n already at d = n, since the one
/// missing weight n+1 has the wrong parity there.
inline bool phi_independent_k2(const Params& p) {
  if (p.k() != 2) throw std::invalid_argument("phi_independent_k2 requires k = 2");
  return p.n() <= p.d();
}

}  // namespace powideal
