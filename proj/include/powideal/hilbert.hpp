#pragma once

// Hilbert functions of R_{n,k,d} = S / I_{n,k,d}.
//
// Every engine works degree by degree. The quotient is zero from degree kd-1
// on, so tables cover degrees 0..kd-1 and nothing beyond is stored.

#include <powideal/fatpoints.hpp>
#include <powideal/grading.hpp>
#include <powideal/numerics.hpp>
#include <powideal/oracle.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace powideal {

enum class Method { ProvedK2, Conjectured, Oracle, Duality, Series, Comp };

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::ProvedK2: return "proved-k2";
    case Method::Conjectured: return "conjectured";
    case Method::Oracle: return "oracle";
    case Method::Duality: return "duality";
    case Method::Series: return "series";
    case Method::Comp: return "comp";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::ProvedK2, Method::Conjectured, Method::Oracle, Method::Duality, Method::Series, Method::Comp})
    if (method_name(m) == s) return m;
  return std::nullopt;
}

/// Default engine: the proved one when k = 2, the conjectured one otherwise.
inline Method default_method(const Params& p) { return p.k() == 2 ? Method::ProvedK2 : Method::Conjectured; }

/// True when a value computed by `m` rests on an unproved statement.
inline bool is_conjectural(Method m, const Params& p) { return m == Method::Conjectured && p.k() > 2; }

/// Raised when a closed-form series is requested outside its hypotheses.
class ClosedFormUnavailable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct HilbertFunction {
  Params params;
  Method method;
  std::vector<BigInt> values;  // degrees 0..kd-1

  bool conjectural() const { return is_conjectural(method, params); }
  /// Value at any degree; zero from kd on.
  BigInt at(long i) const {
    return (i < 0 || i >= static_cast<long>(values.size())) ? BigInt(0) : values[i];
  }
};

struct HilbertSeries {
  UniPoly numerator;
  long denom_exponent;
};

/// HF(R_{n,2,d}; i): C(n+i,n) below d, then for i = d+j the sum over weights
/// h < d-j with i-h even of C(n+1,h) (C(n+(i-h)/2, n) - C(n+j, n)).
inline BigInt hf_proved_k2(const Params& p, long i) {
  if (p.k() != 2) throw std::invalid_argument("hf_proved_k2 requires k = 2");
  const long n = p.n(), d = p.d();
  if (i < 0) return 0;
  if (i < d) return binomial(n + i, n);
  const long j = i - d;
  const BigInt base = binomial(n + j, n);
  BigInt total = 0;
  for (long h = (i % 2); h < d - j; h += 2) {
    BigInt term = binomial(n + (i - h) / 2, n) - base;
    // (i-h)/2 > j whenever h < d-j, so each block is nonempty once n >= 1
    if (term < 0 || (n >= 1 && term == 0))
      throw std::logic_error("hf_proved_k2: nonpositive block dimension at " + p.to_string());
    total += binomial(n + 1, h) * term;
  }
  return total;
}

/// One weight class in the conjectured formula.
struct WeightBlock {
  long weight;       // h
  BigInt count;      // N_h
  BigInt block_dim;  // C(n+(i-h)/k, n) - C(n+j, n)
};

/// The weight classes contributing to HF(R; D+j): h < (k-1)(d-j),
/// h <= (k-1)(n+1), i - h divisible by k. Empty outside D <= i <= kd-2.
inline std::vector<WeightBlock> conjectured_blocks(const Params& p, long i) {
  std::vector<WeightBlock> out;
  const long j = i - p.D();
  if (j < 0 || j > p.d() - 2) return out;
  const long n = p.n(), k = p.k();
  const auto& N = weight_counts(n, k);
  const BigInt base = binomial(n + j, n);
  const long bound = std::min((k - 1) * (p.d() - j) - 1, N.max_weight());
  for (long h = 0; h <= std::min(i, bound); ++h) {
    if ((i - h) % k) continue;
    out.push_back({h, N[h], binomial(n + (i - h) / k, n) - base});
  }
  return out;
}

/// HF(R_{n,k,d}; i) by the weight-count algorithm (proved for k = 2,
/// conjectural for k > 2).
inline BigInt hf_conjectured(const Params& p, long i) {
  if (i < 0) return 0;
  if (i < p.D()) return binomial(p.n() + i, p.n());
  if (i >= p.kd() - 1) return 0;
  BigInt total = 0;
  for (const auto& b : conjectured_blocks(p, i)) total += b.count * b.block_dim;
  return total;
}

/// Closed-form Hilbert series for k = 2 and two, three or four variables.
inline HilbertSeries series_closed_form(const Params& p) {
  if (p.k() != 2) throw ClosedFormUnavailable("closed-form series needs k = 2");
  const long d = p.d();
  const auto t = [](long c, long e) { return UniPoly::monomial(c, static_cast<std::size_t>(e)); };
  const auto tb = [](const BigInt& c, long e) { return UniPoly::monomial(c, static_cast<std::size_t>(e)); };
  switch (p.n()) {
    case 1:
      return {UniPoly{1} + t(-2, d) + t(1, 2 * d), 2};
    case 2:
      if (d < 2) throw ClosedFormUnavailable("closed-form series for three variables needs d >= 2");
      return {UniPoly{1} + t(-4, d) + t(d, 2 * d - 1) + t(3, 2 * d) + t(-d, 2 * d + 1), 3};
    case 3:
      if (d < 3) throw ClosedFormUnavailable("closed-form series for four variables needs d >= 3");
      return {UniPoly{1} + t(-8, d) + tb(binomial(d, 2), 2 * d - 2) + t(4 * d, 2 * d - 1) +
                  tb(BigInt(-(d * d - 7)), 2 * d) + t(-4 * d, 2 * d + 1) + tb(binomial(d + 1, 2), 2 * d + 2),
              4};
    default:
      throw ClosedFormUnavailable("closed-form series only for n+1 in {2,3,4}");
  }
}

/// (1-t)^{n+1} * sum values[i] t^i, which is exact because the table ends in
/// zeros. Throws if the last stored value is nonzero.
inline HilbertSeries numerator_from_values(const std::vector<BigInt>& values, long n) {
  if (!values.empty() && values.back() != 0)
    throw std::domain_error("numerator_from_values: Hilbert function is not eventually zero");
  const UniPoly hs{std::vector<BigInt>(values)};
  return {hs * UniPoly::one_minus_t_pow(static_cast<std::size_t>(n + 1)), n + 1};
}

inline HilbertSeries numerator_from_hf(const HilbertFunction& hf) {
  return numerator_from_values(hf.values, hf.params.n());
}

/// HF(R; i) by any engine.
inline BigInt hf_value(const Params& p, long i, Method m, OracleOptions opts = {}) {
  if (i < 0 || i >= p.kd()) return 0;
  switch (m) {
    case Method::ProvedK2: return hf_proved_k2(p, i);
    case Method::Conjectured: return hf_conjectured(p, i);
    case Method::Oracle: return hf_oracle(p, i, opts);
    case Method::Duality:
      if (i < p.D()) return binomial(p.n() + i, p.n());
      return detail::duality_value(p, i - p.D());
    case Method::Comp:
      if (i < p.D()) return binomial(p.n() + i, p.n());
      if (i >= p.kd() - 1) return 0;
      return comp_formula(p, i - p.D());
    case Method::Series: {
      const auto s = series_closed_form(p);
      return expand_series(s.numerator, s.denom_exponent, i).back();
    }
  }
  throw std::logic_error("hf_value: unknown method");
}

/// Full table over degrees 0..kd-1.
inline HilbertFunction hf_table(const Params& p, Method m, OracleOptions opts = {}) {
  HilbertFunction hf{p, m, {}};
  const long top = p.kd() - 1;
  switch (m) {
    case Method::Series: {
      const auto s = series_closed_form(p);
      hf.values = expand_series(s.numerator, s.denom_exponent, top);
      break;
    }
    case Method::Oracle: {
      PowerIdealOracle oracle(p, opts);
      for (long i = 0; i <= top; ++i) hf.values.push_back(oracle.hf(i));
      break;
    }
    default:
      for (long i = 0; i <= top; ++i) hf.values.push_back(hf_value(p, i, m, opts));
  }
  return hf;
}

/// HF at the top two nonzero degrees 2d-2 and 2d-3 for k = 2: the predicted
/// values C(n+d-2, n-1) and (n+1) C(n+d-2, n-1) next to the values of
/// hf_proved_k2. The second prediction is off by one in the upper index; the
/// true value is (n+1) C(n+d-3, n-1).
struct TopDegreeReport {
  BigInt stated_top;   // at 2d-2
  BigInt stated_next;  // at 2d-3
  BigInt actual_top;
  BigInt actual_next;
  bool top_agrees() const { return stated_top == actual_top; }
  bool next_agrees() const { return stated_next == actual_next; }
};

inline TopDegreeReport top_socle_predictions(const Params& p) {
  if (p.k() != 2) throw std::invalid_argument("top_socle_predictions requires k = 2");
  if (p.d() < 3) throw std::invalid_argument("top_socle_predictions requires d >= 3");
  if (p.n() < 1) throw std::invalid_argument("top_socle_predictions requires n >= 1");
  const long n = p.n(), d = p.d();
  const BigInt c = binomial(n + d - 2, n - 1);
  return {c, BigInt(n + 1) * c, hf_proved_k2(p, 2 * d - 2), hf_proved_k2(p, 2 * d - 3)};
}

}  // namespace powideal
