// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <powideal/cli/app.hpp>
#include <powideal/fatpoints.hpp>
#include <powideal/hilbert.hpp>
#include <powideal/oracle.hpp>

#include "support/piecewise_k2.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace powideal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

std::string join_values(const std::vector<BigInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_decimal(v[i]);
  return out;
}

std::string triple(long n, long k, long d) {
  return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",d=" + std::to_string(d) + ")";
}

Outcome criterion1() {
  Outcome o;
  std::vector<std::string> args{"powideal", "hf", "--n", "3", "--k", "2", "--d", "5"};
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const auto start = Clock::now();
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  const double t = seconds_since(start);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(out.str() == "1,4,10,20,35,48,52,40,15,0\n", "output " + out.str());
  o.require(t < 1.0, "took " + fmt_seconds(t));
  if (o.pass) o.detail = "table 1,4,10,20,35,48,52,40,15,0 in " + fmt_seconds(t);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Params p(2, 4, 8);
  const BigInt v = hf_conjectured(p, 28);
  o.require(v == 195, "hf_conjectured = " + to_decimal(v));
  const auto& N = weight_counts(2, 4).values();
  const std::vector<BigInt> expectN{1, 3, 6, 10, 12, 12, 10, 6, 3, 1};
  o.require(N == expectN, "N = " + join_values(N));
  const auto blocks = conjectured_blocks(p, 28);
  std::vector<BigInt> dims;
  for (const auto& b : blocks) dims.push_back(b.block_dim);
  o.require(dims == std::vector<BigInt>{21, 13, 6}, "blocks = " + join_values(dims));
  if (o.pass) o.detail = "HF(28) = 195, N = (" + join_values(N) + "), blocks (21,13,6)";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Params p(2, 4, 3);
  const BigInt g = gens_count(p), r = phi_rank(p);
  o.require(g == 16, "gens_count = " + to_decimal(g));
  o.require(r == 16, "phi_rank = " + to_decimal(r));
  if (o.pass) o.detail = "gens_count = phi_rank = 16";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto start = Clock::now();
  long checked = 0;
  for (long n = 1; n <= 3; ++n)
    for (long d = 1; d <= 6; ++d) {
      const Params p(n, 2, d);
      const PowerIdealOracle oracle(p, {kDefaultMaxBlockEntries, 1});
      for (long i = 0; i <= 2 * d - 1; ++i, ++checked) {
        const BigInt a = oracle.hf(i), b = hf_proved_k2(p, i);
        o.require(a == b, triple(n, 2, d) + " degree " + std::to_string(i) + ": oracle " + to_decimal(a) +
                              " vs formula " + to_decimal(b));
      }
    }
  const double t = seconds_since(start);
  o.require(t < 120.0, "took " + fmt_seconds(t));
  if (o.pass) o.detail = std::to_string(checked) + " degrees agree in " + fmt_seconds(t);
  return o;
}

Outcome criterion5() {
  Outcome o;
  cli::SweepSpec spec;
  spec.n = {0, 4};
  spec.k = {2, 5};
  spec.d = {1, 40};
  spec.methods = {Method::Conjectured, Method::Comp, Method::Duality};
  spec.jobs = std::max(1u, std::thread::hardware_concurrency());
  spec.validate();
  const auto start = Clock::now();
  const auto result = cli::run_sweep(spec, nullptr);
  const double t = seconds_since(start);
  const auto& s = result.summary;
  o.require(s.disagreements.empty(), std::to_string(s.disagreements.size()) + " disagreements, first " +
                                         (s.disagreements.empty() ? "" : cli::reproducer(s.disagreements.front())));
  o.require(s.guarded == 0, std::to_string(s.guarded) + " guarded");
  o.require(s.tuples == 5 * 4 * 40, "tuples " + std::to_string(s.tuples));
  o.require(s.checks > 0 && s.checks == s.agreements, "checks " + std::to_string(s.checks));
  if (o.pass)
    o.detail = std::to_string(s.tuples) + " tuples, " + std::to_string(s.checks) + " compared degrees, 0 disagreements in " +
               fmt_seconds(t);
  return o;
}

Outcome criterion6() {
  Outcome o;
  long table_checks = 0;
  for (long n = 1; n <= 5; ++n)
    for (long d = 1; d <= 10; ++d)
      for (long m = 0; m <= 2 * d + n + 4; ++m) {
        std::optional<BigInt> expect;
        try {
          expect = piecewise::fat_hf_k2(n, d, m);
        } catch (const std::logic_error& e) {
          o.require(false, e.what());
          continue;
        }
        if (!expect) continue;
        ++table_checks;
        const BigInt v = fat_hf(n, 2, d, m);
        o.require(v == *expect, triple(n, 2, d) + " m=" + std::to_string(m) + ": " + to_decimal(v) + " vs table " +
                                    to_decimal(*expect));
      }
  long oracle_checks = 0;
  for (long k = 2; k <= 3; ++k)
    for (long n = 1; n <= 2; ++n)
      for (long d = 1; d <= 3; ++d)
        for (long m = 0; m <= k * d + k * n; ++m, ++oracle_checks) {
          const BigInt a = fat_oracle(n, k, d, m, {0, 1}), b = fat_hf(n, k, d, m);
          o.require(a == b, triple(n, k, d) + " m=" + std::to_string(m) + ": oracle " + to_decimal(a) + " vs " +
                                to_decimal(b));
        }
  if (o.pass)
    o.detail = std::to_string(table_checks) + " table values and " + std::to_string(oracle_checks) +
               " interpolation ranks match";
  return o;
}

Outcome criterion7() {
  Outcome o;
  long checks = 0;
  for (long n = 0; n <= 4; ++n)
    for (long k = 2; k <= 4; ++k)
      for (long d = 1; d <= 6; ++d)
        for (long m = 0; m <= k * d + k * n; ++m, ++checks) {
          const BigInt a = initial_ideal_hf(n, k, d, m), b = fat_hf(n, k, d, m);
          o.require(a == b, triple(n, k, d) + " m=" + std::to_string(m) + ": " + to_decimal(a) + " vs " + to_decimal(b));
        }
  if (o.pass) o.detail = std::to_string(checks) + " values match";
  return o;
}

Outcome criterion8() {
  Outcome o;
  long checks = 0;
  for (long n = 1; n <= 3; ++n)
    for (long d = 1; d <= 20; ++d) {
      const Params p(n, 2, d);
      HilbertSeries closed;
      try {
        closed = series_closed_form(p);
      } catch (const ClosedFormUnavailable&) {
        continue;
      }
      ++checks;
      const auto derived = numerator_from_hf(hf_table(p, Method::ProvedK2));
      o.require(derived.numerator == closed.numerator && derived.denom_exponent == closed.denom_exponent,
                triple(n, 2, d) + ": numerators differ");
    }
  o.require(checks >= 3 * 18, "only " + std::to_string(checks) + " triples covered");
  if (o.pass) o.detail = std::to_string(checks) + " numerators match";
  return o;
}

Outcome criterion9() {
  Outcome o;
  long checks = 0;
  for (long n = 0; n <= 4; ++n)
    for (long k = 2; k <= 4; ++k)
      for (long d = 1; d <= 6; ++d, ++checks) {
        const auto v = vanishing_at_one(fat_series(n, k, d).numerator);
        const BigInt e = ipow(BigInt(k), n) * binomial(d + n - 1, n);
        o.require(v.order == n, triple(n, k, d) + ": order " + std::to_string(v.order));
        o.require(v.residual == e, triple(n, k, d) + ": residual " + to_decimal(v.residual) + " vs " + to_decimal(e));
      }
  if (o.pass) o.detail = std::to_string(checks) + " numerators vanish to order n with the expected residual";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::string record;
  for (long d = 2; d <= 3; ++d) {
    const Params p(2, 2, d);
    const auto socle = socle_dims(p);
    const auto hf = hf_table(p, Method::ProvedK2).values;
    o.require(socle.size() == hf.size(), "size mismatch");
    for (std::size_t i = 0; i < socle.size() && i < hf.size(); ++i) {
      o.require(socle[i] >= 0 && socle[i] <= hf[i], "d=" + std::to_string(d) + " degree " + std::to_string(i) +
                                                         ": socle " + to_decimal(socle[i]) + " > HF " + to_decimal(hf[i]));
      if (static_cast<long>(i) > 2 * d - 2) o.require(socle[i] == 0, "nonzero socle beyond 2d-2");
    }
    o.require(socle[2 * d - 2] == hf[2 * d - 2], "top degree is not all socle");
    bool concentrated = socle[2 * d - 2] == binomial(2 + d - 2, 1);
    for (long i = 0; i < 2 * d - 2; ++i) concentrated = concentrated && socle[i] == 0;
    record += " d=" + std::to_string(d) + ": socle (" + join_values(socle) + "), level conjecture " +
              (concentrated ? "holds" : "fails") + ";";
  }
  o.detail = "self-consistent;" + record;
  if (!record.empty()) o.detail.pop_back();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"hf table for n=3 k=2 d=5", criterion1},
      {"worked example HF(28) for n=2 k=4 d=8", criterion2},
      {"generator count and phi rank for n=2 k=4 d=3", criterion3},
      {"oracle equals proved formula for k=2", criterion4},
      {"desk-scale sweep conjectured/comp/duality", criterion5},
      {"fat-point piecewise table and interpolation ranks", criterion6},
      {"initial ideal equals fat-point Hilbert function", criterion7},
      {"closed-form series numerators", criterion8},
      {"multiplicity from the series numerator", criterion9},
      {"socle report for k=2 n=2", criterion10},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c + 1 << ": " << criteria[c].first << " | " << o.detail
              << std::endl;
  }
  return failures ? 1 : 0;
}
