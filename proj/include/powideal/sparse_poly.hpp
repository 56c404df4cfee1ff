#pragma once

// Multivariate polynomials over Z in variables x0..x{n}, keyed by exponent
// vector. Zero coefficients are never stored.
//
// Text syntax (used by the CLI): terms `c*x0^a0*x1^a1*...` joined by `+`/`-`,
// factors with exponent zero omitted, exponent one written as a bare variable,
// the coefficient always present. Terms are printed in decreasing lexicographic
// order of exponent vectors. Example: `1*x1^2-1*x0^2`.

#include <powideal/numerics.hpp>

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace powideal {

using Exponents = std::vector<long>;

class SparseIntPoly {
 public:
  explicit SparseIntPoly(std::size_t vars) : vars_(vars) {}

  static SparseIntPoly constant(std::size_t vars, const BigInt& c) {
    SparseIntPoly p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
  }
  static SparseIntPoly variable_power(std::size_t vars, std::size_t var, long e) {
    SparseIntPoly p(vars);
    Exponents ex(vars, 0);
    ex.at(var) = e;
    p.add_term(ex, 1);
    return p;
  }

  std::size_t vars() const { return vars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }

  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != vars_) throw std::invalid_argument("SparseIntPoly: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Total degree of a homogeneous polynomial, -1 for zero; throws if not homogeneous.
  long homogeneous_degree() const {
    long deg = -1;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (long x : e) s += x;
      if (deg >= 0 && s != deg) throw std::domain_error("SparseIntPoly: not homogeneous");
      deg = s;
    }
    return deg;
  }

  bool is_homogeneous() const {
    try {
      homogeneous_degree();
      return true;
    } catch (const std::domain_error&) {
      return false;
    }
  }

  SparseIntPoly& operator+=(const SparseIntPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparseIntPoly& operator-=(const SparseIntPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparseIntPoly operator+(SparseIntPoly a, const SparseIntPoly& b) { return a += b; }
  friend SparseIntPoly operator-(SparseIntPoly a, const SparseIntPoly& b) { return a -= b; }

  friend SparseIntPoly operator*(const SparseIntPoly& a, const SparseIntPoly& b) {
    a.check(b);
    SparseIntPoly r(a.vars_);
    Exponents e(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  SparseIntPoly pow(long e) const {
    if (e < 0) throw std::invalid_argument("SparseIntPoly::pow: negative exponent");
    SparseIntPoly r = constant(vars_, 1), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  /// Multiplies by the monomial x^m.
  SparseIntPoly times_monomial(const Exponents& m) const {
    SparseIntPoly r(vars_);
    Exponents e(vars_);
    for (const auto& [ea, c] : terms_) {
      for (std::size_t i = 0; i < vars_; ++i) e[i] = ea[i] + m[i];
      r.terms_.emplace(e, c);
    }
    return r;
  }

  friend bool operator==(const SparseIntPoly&, const SparseIntPoly&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (c < 0) out += "-";
      else if (!first) out += "+";
      out += to_decimal(BigInt(abs(c)));
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        out += "*x" + std::to_string(i);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
      }
      first = false;
    }
    return out;
  }

  /// Parses the text syntax above. Bare variables without a coefficient are
  /// accepted too.
  static SparseIntPoly parse(std::size_t vars, const std::string& text) {
    SparseIntPoly p(vars);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_uint = [&]() -> std::string {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("SparseIntPoly::parse: expected digits at " + std::to_string(start));
      return text.substr(start, pos - start);
    };
    skip_ws();
    if (text.substr(pos) == "0") return p;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos >= text.size()) {
        if (first) throw std::invalid_argument("SparseIntPoly::parse: empty input");
        break;
      }
      int sign = 1;
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        skip_ws();
      } else if (!first) {
        throw std::invalid_argument("SparseIntPoly::parse: expected '+' or '-' at " + std::to_string(pos));
      }
      BigInt coeff = 1;
      Exponents e(vars, 0);
      bool need_factor = true;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = from_decimal(read_uint());
        need_factor = false;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          need_factor = true;
        }
      }
      while (need_factor) {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'x')
          throw std::invalid_argument("SparseIntPoly::parse: expected variable at " + std::to_string(pos));
        ++pos;
        const long var = std::stol(read_uint());
        if (var < 0 || static_cast<std::size_t>(var) >= vars)
          throw std::invalid_argument("SparseIntPoly::parse: variable index out of range");
        long ex = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          ex = std::stol(read_uint());
        }
        e[var] += ex;
        skip_ws();
        need_factor = pos < text.size() && text[pos] == '*';
        if (need_factor) ++pos;
      }
      p.add_term(e, sign < 0 ? BigInt(-coeff) : coeff);
      first = false;
    }
    return p;
  }

 private:
  void check(const SparseIntPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("SparseIntPoly: variable count mismatch");
  }

  std::size_t vars_;
  std::map<Exponents, BigInt> terms_;
};

/// All exponent vectors of total degree `degree` in `vars` variables, in
/// decreasing lexicographic order (graded lex within one degree).
inline std::vector<Exponents> monomials_of_degree(std::size_t vars, long degree) {
  std::vector<Exponents> out;
  if (degree < 0 || vars == 0) return out;
  Exponents cur(vars, 0);
  // recursive fill: first variable takes the largest share first
  auto rec = [&](auto&& self, std::size_t var, long left) -> void {
    if (var + 1 == vars) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (long a = left; a >= 0; --a) {
      cur[var] = a;
      self(self, var + 1, left - a);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace powideal
