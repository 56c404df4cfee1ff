#pragma once

// Verification sweeps: evaluate several Hilbert-function engines over a box of
// (n, k, d) triples, compare them degree by degree and persist every value.

#include <powideal/cli/cache.hpp>
#include <powideal/cli/reports.hpp>
#include <powideal/hilbert.hpp>

#include <algorithm>
#include <atomic>
#include <ctime>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace powideal::cli {

struct IntRange {
  long lo = 0, hi = -1;
  bool empty() const { return lo > hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// "a" or "a:b" (inclusive).
inline IntRange parse_range(const std::string& s) {
  auto to_long = [&](const std::string& t) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(t, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad range '" + s + "'");
    }
    if (used != t.size()) throw std::invalid_argument("bad range '" + s + "'");
    return v;
  };
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const long v = to_long(s);
    return {v, v};
  }
  return {to_long(s.substr(0, colon)), to_long(s.substr(colon + 1))};
}

inline std::string range_string(const IntRange& r) {
  return r.lo == r.hi ? std::to_string(r.lo) : std::to_string(r.lo) + ":" + std::to_string(r.hi);
}

struct SweepSpec {
  IntRange n, k, d;
  std::optional<IntRange> degrees;  // nullopt: every degree 0..kd-1
  std::vector<Method> methods;
  unsigned jobs = 1;
  std::optional<std::string> cache_path;
  OracleOptions oracle;
  bool skip_guarded = false;

  void validate() const {
    if (n.empty() || k.empty() || d.empty()) throw std::invalid_argument("sweep ranges must be nonempty");
    if (degrees && degrees->empty()) throw std::invalid_argument("degree range must be nonempty");
    if (n.lo < 0) throw std::invalid_argument("n must be >= 0");
    if (k.lo < 2) throw std::invalid_argument("k must be >= 2");
    if (d.lo < 1) throw std::invalid_argument("d must be >= 1");
    if (methods.empty()) throw std::invalid_argument("at least one method is required");
    if (jobs == 0) throw std::invalid_argument("--jobs must be >= 1");
  }
};

/// Whether `m` produces a value for HF(R; i) at these parameters.
inline bool method_applies(Method m, const Params& p, long i) {
  switch (m) {
    case Method::ProvedK2: return p.k() == 2;
    case Method::Conjectured:
    case Method::Oracle: return true;
    case Method::Duality:
    case Method::Comp: return i >= p.D() && i <= p.kd() - 2;
    case Method::Series:
      try {
        series_closed_form(p);
        return true;
      } catch (const ClosedFormUnavailable&) {
        return false;
      }
  }
  return false;
}

struct DegreeOutcome {
  long degree = 0;
  std::vector<std::pair<Method, std::string>> values;  // in requested method order
  std::vector<Method> guarded;
  bool agree = true;
};

struct TupleOutcome {
  ParamsTriple params;
  std::vector<DegreeOutcome> degrees;
  bool cached = true;  // every value came from the cache
  std::size_t new_records = 0;
};

struct Disagreement {
  ParamsTriple params;
  long degree;
  std::vector<std::pair<Method, std::string>> values;
};

struct SweepSummary {
  std::size_t tuples = 0;
  std::size_t cached_tuples = 0;
  std::size_t checks = 0;  // degrees where at least two methods were compared
  std::size_t agreements = 0;
  std::size_t guarded = 0;
  std::size_t new_records = 0;
  std::vector<Disagreement> disagreements;

  int exit_code(bool skip_guarded) const {
    if (!disagreements.empty()) return 1;
    if (guarded && !skip_guarded) return 3;
    return 0;
  }
};

struct SweepResult {
  SweepSummary summary;
  std::vector<TupleOutcome> tuples;  // sorted by (n, k, d)
};

namespace detail {

inline TupleOutcome run_tuple(const ParamsTriple& t, const SweepSpec& spec, ResultCache* cache) {
  const Params p(t.n, t.k, t.d);
  TupleOutcome out{t, {}, true, 0};
  std::unique_ptr<PowerIdealOracle> oracle;
  const long lo = spec.degrees ? std::max(0L, spec.degrees->lo) : 0;
  const long hi = spec.degrees ? std::min(p.kd() - 1, spec.degrees->hi) : p.kd() - 1;
  std::vector<VerificationRecord> fresh;
  for (long i = lo; i <= hi; ++i) {
    DegreeOutcome deg{i, {}, {}, true};
    std::vector<bool> is_new;
    for (Method m : spec.methods) {
      if (!method_applies(m, p, i)) continue;
      const std::string name(method_name(m));
      if (cache) {
        if (auto rec = cache->find({t.n, t.k, t.d, i, name})) {
          deg.values.emplace_back(m, rec->value);
          is_new.push_back(false);
          continue;
        }
      }
      BigInt v;
      try {
        if (m == Method::Oracle) {
          if (!oracle) oracle = std::make_unique<PowerIdealOracle>(p, OracleOptions{spec.oracle.max_block_entries, 1});
          v = oracle->hf(i);
        } else {
          v = hf_value(p, i, m, spec.oracle);
        }
      } catch (const GuardRefusal&) {
        deg.guarded.push_back(m);
        out.cached = false;
        continue;
      }
      deg.values.emplace_back(m, to_decimal(v));
      is_new.push_back(true);
      out.cached = false;
    }
    for (std::size_t a = 1; a < deg.values.size(); ++a)
      if (deg.values[a].second != deg.values[0].second) deg.agree = false;
    const auto now = static_cast<long long>(std::time(nullptr));
    for (std::size_t a = 0; a < deg.values.size(); ++a) {
      if (!is_new[a]) continue;
      VerificationRecord rec{t.n, t.k, t.d, i, std::string(method_name(deg.values[a].first)), deg.values[a].second,
                             std::nullopt, now, kToolVersion};
      std::vector<std::string> agreeing;
      for (std::size_t b = 0; b < deg.values.size(); ++b)
        if (b != a && deg.values[b].second == deg.values[a].second)
          agreeing.emplace_back(method_name(deg.values[b].first));
      if (deg.values.size() > 1) rec.agrees_with = std::move(agreeing);
      fresh.push_back(std::move(rec));
    }
    out.degrees.push_back(std::move(deg));
  }
  if (cache)
    for (const auto& r : fresh)
      if (cache->append(r)) ++out.new_records;
  return out;
}

}  // namespace detail

inline SweepResult run_sweep(const SweepSpec& spec, ResultCache* cache) {
  spec.validate();
  std::vector<ParamsTriple> tuples;
  for (long n = spec.n.lo; n <= spec.n.hi; ++n)
    for (long k = spec.k.lo; k <= spec.k.hi; ++k)
      for (long d = spec.d.lo; d <= spec.d.hi; ++d) tuples.push_back({n, k, d});

  SweepResult result;
  result.tuples.resize(tuples.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(spec.jobs);
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t t; (t = next.fetch_add(1)) < tuples.size();)
        result.tuples[t] = detail::run_tuple(tuples[t], spec, cache);
    } catch (...) {
      errors[w] = std::current_exception();
      next = tuples.size();
    }
  };
  if (spec.jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < spec.jobs; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  auto& s = result.summary;
  for (const auto& t : result.tuples) {
    ++s.tuples;
    if (t.cached) ++s.cached_tuples;
    s.new_records += t.new_records;
    for (const auto& deg : t.degrees) {
      s.guarded += deg.guarded.size();
      if (deg.values.size() < 2) continue;
      ++s.checks;
      if (deg.agree) ++s.agreements;
      else s.disagreements.push_back({t.params, deg.degree, deg.values});
    }
  }
  return result;
}

inline std::string reproducer(const Disagreement& d) {
  std::string methods;
  for (const auto& [m, v] : d.values) methods += std::string(methods.empty() ? "" : " ") + std::string(method_name(m)) + "=" + v;
  return "n=" + std::to_string(d.params.n) + " k=" + std::to_string(d.params.k) + " d=" + std::to_string(d.params.d) +
         " degree=" + std::to_string(d.degree) + ": " + methods;
}

inline json summary_json(const SweepSpec& spec, const SweepSummary& s) {
  json dis = json::array();
  for (const auto& d : s.disagreements) {
    json values = json::object();
    for (const auto& [m, v] : d.values) values[std::string(method_name(m))] = v;
    dis.push_back({{"params", d.params}, {"degree", d.degree}, {"values", values}});
  }
  std::vector<std::string> methods;
  for (Method m : spec.methods) methods.emplace_back(method_name(m));
  return json{{"ranges", {{"n", range_string(spec.n)}, {"k", range_string(spec.k)}, {"d", range_string(spec.d)}}},
              {"methods", methods},
              {"tuples", s.tuples},
              {"cached_tuples", s.cached_tuples},
              {"checks", s.checks},
              {"agreements", s.agreements},
              {"disagreements", dis},
              {"guarded", s.guarded},
              {"new_records", s.new_records}};
}

inline void render_sweep(std::ostream& os, const SweepSpec& spec, const SweepResult& r, Format f) {
  const auto& s = r.summary;
  switch (f) {
    case Format::Json: os << summary_json(spec, s).dump() << '\n'; break;
    case Format::Csv:
      os << kCsvHeader << '\n';
      for (const auto& t : r.tuples)
        for (const auto& deg : t.degrees)
          for (const auto& [m, v] : deg.values) write_csv_row(os, t.params, deg.degree, std::string(method_name(m)), v);
      break;
    case Format::Text: {
      std::vector<std::string> methods;
      for (Method m : spec.methods) methods.emplace_back(method_name(m));
      os << "sweep n=" << range_string(spec.n) << " k=" << range_string(spec.k) << " d=" << range_string(spec.d)
         << " methods=" << join(methods) << '\n';
      for (const auto& d : s.disagreements) os << "DISAGREE " << reproducer(d) << '\n';
      if (!s.disagreements.empty()) {
        const auto& first = s.disagreements.front();
        os << "reproduce: powideal hf --n " << first.params.n << " --k " << first.params.k << " --d "
           << first.params.d << " --degree " << first.degree << " --method "
           << method_name(first.values.front().first) << '\n';
      }
      os << "tuples: " << s.tuples << " (cached: " << s.cached_tuples << ")\n"
         << "checks: " << s.checks << '\n'
         << "agreements: " << s.agreements << '\n'
         << "disagreements: " << s.disagreements.size() << '\n'
         << "guarded: " << s.guarded << '\n'
         << "new records: " << s.new_records << '\n';
      break;
    }
  }
}

}  // namespace powideal::cli
