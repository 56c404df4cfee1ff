#pragma once

// Brute-force linear algebra for the quantities the closed forms predict:
// ranks of the multiplication maps (f_g) -> sum f_g psi_g per multicyclic
// degree, fat-point interpolation ranks over Q(xi), socle dimensions, and
// monomial counting for the initial ideal of the fat-point ideal.
//
// Matrices are indexed by monomials in decreasing lexicographic order, so
// every matrix and rank is reproducible.

#include <powideal/cyclotomic.hpp>
#include <powideal/fatpoints.hpp>
#include <powideal/grading.hpp>
#include <powideal/matrix.hpp>
#include <powideal/numerics.hpp>
#include <powideal/sparse_poly.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace powideal {

struct OracleOptions {
  /// Largest matrix (rows * cols) any single computation may build; 0 disables the guard.
  std::size_t max_block_entries = kDefaultMaxBlockEntries;
  /// Worker threads for independent block ranks.
  unsigned jobs = 1;
};

/// Monomial basis of S_{i,h}: exponents a = h + k b with |b| = (i - wt h) / k,
/// in decreasing lexicographic order.
inline std::vector<Exponents> graded_piece_basis(long k, long i, const Multicycle& h) {
  const long rest = i - weight(h);
  if (rest < 0 || rest % k) return {};
  auto out = monomials_of_degree(h.size(), rest / k);
  for (auto& e : out)
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = h[v] + k * e[v];
  return out;
}

/// psi_g: the component of (x_0 + ... + x_n)^D in multicyclic degree g.
inline SparseIntPoly psi_gen(const Params& p, const Multicycle& g) {
  if (g.modulus() != p.k() || static_cast<long>(g.size()) != p.vars())
    throw std::invalid_argument("psi_gen: multicycle does not match params");
  SparseIntPoly out(static_cast<std::size_t>(p.vars()));
  for (const auto& a : graded_piece_basis(p.k(), p.D(), g)) out.add_term(a, multinomial(p.D(), a));
  return out;
}

/// The nonzero psi_g, i.e. g in G_{k,n,D}, in lexicographic order of g.
inline std::vector<std::pair<Multicycle, SparseIntPoly>> psi_family(const Params& p) {
  std::vector<std::pair<Multicycle, SparseIntPoly>> out;
  for (const auto& g : enumerate_multicycles(p.k(), p.vars())) {
    if (!in_G(p, p.D(), g)) continue;
    out.emplace_back(g, psi_gen(p, g));
  }
  return out;
}

/// phi_g = (sum xi^{g_i} x_i)^D written in the psi basis: the coefficient of
/// psi_h is xi^{<g,h>}, for every h in G_{k,n,D}. Any g is accepted here.
inline std::vector<std::pair<Multicycle, CycNumber>> phi_components(const Params& p, const Multicycle& g) {
  const auto& field = CyclotomicField::get(p.k());
  std::vector<std::pair<Multicycle, CycNumber>> out;
  for (const auto& h : enumerate_multicycles(p.k(), p.vars())) {
    if (!in_G(p, p.D(), h)) continue;
    out.emplace_back(h, field.xi_pow(dot(g, h)));
  }
  return out;
}

/// A generator of I_{n,k,d} (g_0 = 0) in the psi basis.
inline std::vector<std::pair<Multicycle, CycNumber>> phi_gen(const Params& p, const Multicycle& g) {
  if (g.size() == 0 || g[0] != 0) throw std::invalid_argument("phi_gen: requires g_0 = 0");
  return phi_components(p, g);
}

using CycPoly = std::map<Exponents, CycNumber>;

/// (sum xi^{g_i} x_i)^D expanded directly by the multinomial theorem.
inline CycPoly phi_expanded(const Params& p, const Multicycle& g) {
  const auto& field = CyclotomicField::get(p.k());
  CycPoly out;
  for (const auto& a : monomials_of_degree(static_cast<std::size_t>(p.vars()), p.D())) {
    long e = 0;
    for (std::size_t v = 0; v < a.size(); ++v) e += g[v] * a[v];
    out.emplace(a, field.xi_pow(e) * Rational(multinomial(p.D(), a)));
  }
  return out;
}

namespace detail {

inline std::map<Exponents, std::size_t> index_of(const std::vector<Exponents>& basis) {
  std::map<Exponents, std::size_t> idx;
  for (std::size_t c = 0; c < basis.size(); ++c) idx.emplace(basis[c], c);
  return idx;
}

template <class Fn>
void for_each_parallel(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t t = 0; t < count; ++t) fn(t);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t t = w; t < count; t += jobs) fn(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

/// Power ideal I_{n,k,d} with its psi generators computed once.
class PowerIdealOracle {
 public:
  explicit PowerIdealOracle(const Params& p, OracleOptions opts = {})
      : p_(p), opts_(opts), psi_(psi_family(p)), blocks_(enumerate_multicycles(p.k(), p.vars())) {}

  const Params& params() const { return p_; }

  /// Matrix whose rows span I_{i,h}: products of the monomials of
  /// S_{i-D, h-g} with psi_g, in the monomial basis of S_{i,h}.
  ExactMatrix<Rational> ideal_block(long i, const Multicycle& h) const {
    const auto cols = graded_piece_basis(p_.k(), i, h);
    const auto col_index = detail::index_of(cols);
    const long j = i - p_.D();
    std::vector<const SparseIntPoly*> gens;
    std::vector<Exponents> mults;
    if (j >= 0) {
      for (const auto& [g, psi] : psi_) {
        for (auto& m : graded_piece_basis(p_.k(), j, h - g)) {
          gens.push_back(&psi);
          mults.push_back(std::move(m));
        }
      }
    }
    check_guard(mults.size(), cols.size(), opts_.max_block_entries,
                "ideal block (i=" + std::to_string(i) + ", h=" + h.to_string() + ")");
    ExactMatrix<Rational> mat(mults.size(), cols.size(), Rational(0));
    Exponents e(static_cast<std::size_t>(p_.vars()));
    for (std::size_t r = 0; r < mults.size(); ++r) {
      for (const auto& [a, c] : gens[r]->terms()) {
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = a[v] + mults[r][v];
        mat(r, col_index.at(e)) = Rational(c);
      }
    }
    return mat;
  }

  /// dim I_{i,h}.
  std::size_t ideal_dim(long i, const Multicycle& h) const { return ideal_block(i, h).rank(); }

  /// HF(R; i) as the sum over multicyclic degrees of dim S_{i,h} - rank.
  BigInt hf(long i) const {
    if (i < 0) return 0;
    if (i < p_.D()) return binomial(p_.n() + i, p_.n());
    std::vector<BigInt> parts(blocks_.size());
    detail::for_each_parallel(blocks_.size(), opts_.jobs, [&](std::size_t t) {
      const auto& h = blocks_[t];
      if (!in_G(p_, i, h)) return;
      const auto mat = ideal_block(i, h);
      parts[t] = static_cast<unsigned long>(mat.cols() - mat.rank());
    });
    BigInt total = 0;
    for (const auto& v : parts) total += v;
    return total;
  }

  /// Socle dimension of R in each degree 0..kd-1.
  std::vector<BigInt> socle_dims() const {
    std::vector<BigInt> out;
    // reduced ideal blocks of degree i+1 are shared by all h of degree i
    std::map<std::pair<long, Multicycle>, std::pair<ExactMatrix<Rational>, std::vector<std::size_t>>> rref;
    auto reduced = [&](long deg, const Multicycle& h) -> const auto& {
      auto key = std::make_pair(deg, h);
      auto it = rref.find(key);
      if (it == rref.end()) {
        auto mat = ideal_block(deg, h);
        auto piv = mat.reduce();
        it = rref.emplace(key, std::make_pair(std::move(mat), std::move(piv))).first;
      }
      return it->second;
    };
    const std::size_t vars = static_cast<std::size_t>(p_.vars());
    for (long i = 0; i < p_.kd(); ++i) {
      BigInt total = 0;
      for (const auto& h : blocks_) {
        const auto basis = graded_piece_basis(p_.k(), i, h);
        if (basis.empty()) continue;
        // columns: quotient coordinates of x_l * v in each target block
        struct Target {
          const ExactMatrix<Rational>* rref;
          std::vector<std::size_t> pivot_row_of;  // per column, or npos
          std::vector<std::size_t> free_pos;      // per column, position among free columns, or npos
          std::map<Exponents, std::size_t> index;
          std::size_t offset;
        };
        constexpr std::size_t npos = static_cast<std::size_t>(-1);
        std::vector<Target> targets;
        std::size_t total_cols = 0;
        for (std::size_t l = 0; l < vars; ++l) {
          std::vector<long> unit(vars, 0);
          unit[l] = 1;
          const Multicycle target_h = h + Multicycle::of_exponents(p_.k(), unit);
          const auto& [mat, piv] = reduced(i + 1, target_h);
          const auto tbasis = graded_piece_basis(p_.k(), i + 1, target_h);
          Target t{&mat, std::vector<std::size_t>(tbasis.size(), npos), std::vector<std::size_t>(tbasis.size(), npos),
                   detail::index_of(tbasis), total_cols};
          for (std::size_t r = 0; r < piv.size(); ++r) t.pivot_row_of[piv[r]] = r;
          std::size_t free_count = 0;
          for (std::size_t c = 0; c < tbasis.size(); ++c)
            if (t.pivot_row_of[c] == npos) t.free_pos[c] = free_count++;
          total_cols += free_count;
          targets.push_back(std::move(t));
        }
        check_guard(basis.size(), total_cols, opts_.max_block_entries, "socle block (i=" + std::to_string(i) + ")");
        ExactMatrix<Rational> m(basis.size(), total_cols, Rational(0));
        for (std::size_t r = 0; r < basis.size(); ++r) {
          for (std::size_t l = 0; l < vars; ++l) {
            const auto& t = targets[l];
            Exponents e = basis[r];
            ++e[l];
            const std::size_t c = t.index.at(e);
            if (t.pivot_row_of[c] == npos) {
              m(r, t.offset + t.free_pos[c]) = 1;
            } else {
              const std::size_t row = t.pivot_row_of[c];
              for (std::size_t cc = 0; cc < t.free_pos.size(); ++cc) {
                if (t.free_pos[cc] == npos) continue;
                const Rational& v = (*t.rref)(row, cc);
                if (!is_zero(v)) m(r, t.offset + t.free_pos[cc]) = -v;
              }
            }
          }
        }
        const std::size_t kernel = basis.size() - m.rank();
        const std::size_t in_ideal = reduced(i, h).second.size();
        total += static_cast<unsigned long>(kernel - in_ideal);
      }
      out.push_back(total);
    }
    return out;
  }

 private:
  Params p_;
  OracleOptions opts_;
  std::vector<std::pair<Multicycle, SparseIntPoly>> psi_;
  std::vector<Multicycle> blocks_;
};

/// HF(R_{n,k,d}; i) by exact rank computation.
inline BigInt hf_oracle(const Params& p, long i, OracleOptions opts = {}) {
  if (i < p.D()) return i < 0 ? BigInt(0) : binomial(p.n() + i, p.n());
  return PowerIdealOracle(p, opts).hf(i);
}

/// Socle dimensions of R_{2,n,d} in degrees 0..2d-1.
inline std::vector<BigInt> socle_dims(const Params& p, OracleOptions opts = {}) {
  if (p.k() != 2) throw std::invalid_argument("socle_dims requires k = 2");
  return PowerIdealOracle(p, opts).socle_dims();
}

/// Interpolation matrix of d-fat points at the k^n xi-points in degree m:
/// row (P, alpha) with |alpha| <= d-1, column x^beta, entry
/// beta!/(beta-alpha)! * P^{beta-alpha} when beta >= alpha.
inline ExactMatrix<CycNumber> fat_interpolation_matrix(long n, long k, long d, long m, OracleOptions opts = {}) {
  detail::check_fat_params(n, k, d);
  const auto& field = CyclotomicField::get(k);
  const std::size_t vars = static_cast<std::size_t>(n + 1);
  const auto cols = monomials_of_degree(vars, m);
  std::vector<Exponents> alphas;
  for (long t = 0; t < d; ++t) {
    auto a = monomials_of_degree(vars, t);
    alphas.insert(alphas.end(), a.begin(), a.end());
  }
  const auto points = n == 0 ? std::vector<Multicycle>{} : enumerate_multicycles(k, n);
  const std::size_t point_count = n == 0 ? 1 : points.size();
  const std::size_t rows = point_count * alphas.size();
  check_guard(rows, cols.size(), opts.max_block_entries, "fat-point interpolation matrix (m=" + std::to_string(m) + ")");
  ExactMatrix<CycNumber> mat(rows, cols.size(), field.zero());
  std::size_t r = 0;
  for (std::size_t pi = 0; pi < point_count; ++pi) {
    for (const auto& alpha : alphas) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& beta = cols[c];
        BigInt coeff = 1;
        long e = 0;
        bool ok = true;
        for (std::size_t v = 0; v < vars && ok; ++v) {
          if (beta[v] < alpha[v]) {
            ok = false;
            break;
          }
          for (long f = 0; f < alpha[v]; ++f) coeff *= beta[v] - f;
          if (v > 0) e += points[pi][v - 1] * (beta[v] - alpha[v]);
        }
        if (ok) mat(r, c) = field.xi_pow(e) * Rational(coeff);
      }
      ++r;
    }
  }
  return mat;
}

/// HF(S / I_k^{(d)}, m) as the rank of the interpolation matrix over Q(xi).
inline BigInt fat_oracle(long n, long k, long d, long m, OracleOptions opts = {}) {
  if (m < 0) return 0;
  return static_cast<unsigned long>(fat_interpolation_matrix(n, k, d, m, opts).rank());
}

/// HF of S / (x_1^k, ..., x_n^k)^d in degree m, by counting monomials x^beta
/// with sum_{j>=1} floor(beta_j / k) < d.
inline BigInt initial_ideal_hf(long n, long k, long d, long m) {
  detail::check_fat_params(n, k, d);
  if (m < 0) return 0;
  // ways[s][f]: choices of beta_1..beta_t with sum s and floor-sum f < d
  std::vector<std::vector<BigInt>> ways(m + 1, std::vector<BigInt>(d, BigInt(0)));
  ways[0][0] = 1;
  for (long var = 1; var <= n; ++var) {
    std::vector<std::vector<BigInt>> next(m + 1, std::vector<BigInt>(d, BigInt(0)));
    for (long s = 0; s <= m; ++s) {
      for (long f = 0; f < d; ++f) {
        if (ways[s][f] == 0) continue;
        for (long b = 0; s + b <= m; ++b) {
          const long nf = f + b / k;
          if (nf >= d) break;
          next[s + b][nf] += ways[s][f];
        }
      }
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (long s = 0; s <= m; ++s)
    for (long f = 0; f < d; ++f) total += ways[s][f];  // x_0 absorbs m - s
  return total;
}

/// Coefficient matrix of the k^n generators phi_g (g_0 = 0) in the monomial basis of S_D.
inline ExactMatrix<CycNumber> phi_matrix(const Params& p, OracleOptions opts = {}) {
  const auto& field = CyclotomicField::get(p.k());
  const auto cols = monomials_of_degree(static_cast<std::size_t>(p.vars()), p.D());
  const auto gs = p.n() == 0 ? std::vector<Multicycle>{} : enumerate_multicycles(p.k(), p.n());
  const std::size_t rows = p.n() == 0 ? 1 : gs.size();
  check_guard(rows, cols.size(), opts.max_block_entries, "phi coefficient matrix");
  ExactMatrix<CycNumber> mat(rows, cols.size(), field.zero());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      long e = 0;
      for (long v = 1; v <= p.n(); ++v) e += gs[r][v - 1] * cols[c][v];
      mat(r, c) = field.xi_pow(e) * Rational(multinomial(p.D(), cols[c]));
    }
  }
  return mat;
}

/// Rank over Q(xi) of the generators phi_g; equals the minimal generator count.
inline BigInt phi_rank(const Params& p, OracleOptions opts = {}) {
  return static_cast<unsigned long>(phi_matrix(p, opts).rank());
}

}  // namespace powideal
