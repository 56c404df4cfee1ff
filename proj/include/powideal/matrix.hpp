#pragma once

// Dense matrices over an exact field (Rational or CycNumber) and Gaussian
// elimination with first-nonzero pivoting.

#include <powideal/cyclotomic.hpp>

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

namespace powideal {

/// Thrown instead of building a matrix larger than the configured bound.
class GuardRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxBlockEntries = 20000;

inline void check_guard(std::size_t rows, std::size_t cols, std::size_t max_entries, const std::string& what) {
  if (max_entries != 0 && rows * cols > max_entries)
    throw GuardRefusal(what + ": " + std::to_string(rows) + "x" + std::to_string(cols) +
                       " matrix exceeds the limit of " + std::to_string(max_entries) + " entries");
}

template <class F>
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, const F& zero)
      : rows_(rows), cols_(cols), data_(rows * cols, zero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// In-place reduced row echelon form; returns the pivot columns. Rows below
  /// the rank are left zero.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      if (!is_unit_one((*this)(r, c))) {
        const F inv = invert((*this)(r, c));
        for (std::size_t cc = c; cc < cols_; ++cc) {
          if (!is_zero((*this)(r, cc))) (*this)(r, cc) = (*this)(r, cc) * inv;
        }
      }
      for (std::size_t rr = 0; rr < rows_; ++rr) {
        if (rr == r || is_zero((*this)(rr, c))) continue;
        const F factor = (*this)(rr, c);
        for (std::size_t cc = c; cc < cols_; ++cc) {
          if (!is_zero((*this)(r, cc))) (*this)(rr, cc) -= factor * (*this)(r, cc);
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  /// Rank by forward elimination only, on a copy.
  std::size_t rank() const {
    ExactMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && is_zero(m(p, c))) ++p;
      if (p == rows_) continue;
      m.swap_rows(p, r);
      const F inv = invert(m(r, c));
      for (std::size_t rr = r + 1; rr < rows_; ++rr) {
        if (is_zero(m(rr, c))) continue;
        const F factor = m(rr, c) * inv;
        for (std::size_t cc = c; cc < cols_; ++cc) {
          if (!is_zero(m(r, cc))) m(rr, cc) -= factor * m(r, cc);
        }
      }
      ++r;
    }
    return r;
  }

 private:
  static F invert(const F& x) {
    if constexpr (std::is_same_v<F, Rational>) {
      return Rational(1) / x;
    } else {
      return x.inverse();
    }
  }
  static bool is_unit_one(const F& x) {
    if constexpr (std::is_same_v<F, Rational>) {
      return x == 1;
    } else {
      return x == x.field().one();
    }
  }

  std::size_t rows_, cols_;
  std::vector<F> data_;
};

}  // namespace powideal
