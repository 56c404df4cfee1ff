#pragma once

// The `powideal` command line. run_cli is the whole program; main() only
// forwards to it, which lets tests drive the tool in-process.

#include <powideal/cli/cache.hpp>
#include <powideal/cli/reports.hpp>
#include <powideal/cli/sweep.hpp>
#include <powideal/fatpoints.hpp>
#include <powideal/hilbert.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace powideal::cli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kInvalid = 2,
  kGuardRefused = 3,
  kClosedFormUnavailable = 4,
};

inline constexpr const char* kPolynomialSyntaxHelp =
    "Polynomials are printed as terms c*x0^a0*x1^a1*... joined by + and -.\n"
    "Every term carries its coefficient, variables with exponent zero are omitted\n"
    "and an exponent of one is written as the bare variable (x2, not x2^1).\n"
    "Terms appear in decreasing lexicographic order of exponent vectors.\n"
    "Example: 1*x1^4-2*x0^2*x1^2+1*x0^4\n";

namespace detail {

struct GlobalOptions {
  std::string format = "text";
  unsigned jobs = 1;
  std::optional<std::string> cache;
  std::size_t max_block_entries = kDefaultMaxBlockEntries;
  bool skip_guarded = false;

  OracleOptions oracle() const { return {max_block_entries, jobs}; }
  Format parsed_format() const {
    auto f = parse_format(format);
    if (!f) throw std::invalid_argument("unknown format '" + format + "'");
    return *f;
  }
};

struct TripleOptions {
  long n = -1, k = -1, d = -1;
  void add_to(CLI::App* sub) {
    sub->add_option("--n", n, "projective dimension (n+1 variables)")->required();
    sub->add_option("--k", k, "order of the roots of unity, k >= 2")->required();
    sub->add_option("--d", d, "exponent parameter, d >= 1")->required();
  }
  Params params() const { return Params(n, k, d); }
  ParamsTriple triple() const { return {n, k, d}; }
};

inline Method method_or_default(const std::string& name, const Params& p) {
  if (name.empty()) return default_method(p);
  auto m = parse_method(name);
  if (!m) throw std::invalid_argument("unknown method '" + name + "'");
  return *m;
}

inline std::vector<Method> parse_method_list(const std::string& list) {
  std::vector<Method> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    auto m = parse_method(item);
    if (!m) throw std::invalid_argument("unknown method '" + item + "'");
    out.push_back(*m);
  }
  return out;
}

inline std::optional<std::string> cache_path(const GlobalOptions& g) {
  if (g.cache) return g.cache;
  if (const char* env = std::getenv("POWIDEAL_CACHE"); env && *env) return std::string(env);
  return std::nullopt;
}

}  // namespace detail

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions of power ideals and of fat points at roots-of-unity points"};
  app.require_subcommand(1);
  app.footer(kPolynomialSyntaxHelp);

  detail::GlobalOptions g;
  app.add_option("--format", g.format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache", g.cache, "result cache file (default: $POWIDEAL_CACHE)");
  app.add_option("--max-block-entries", g.max_block_entries, "largest matrix an oracle may build; 0 disables");
  app.add_flag("--skip-guarded", g.skip_guarded, "verify: do not fail on guard refusals");

  std::function<int()> action;

  // hf
  auto* hf = app.add_subcommand("hf", "Hilbert function of R = S / I_{n,k,d}")->fallthrough();
  detail::TripleOptions hf_t;
  hf_t.add_to(hf);
  std::optional<long> hf_degree;
  std::string hf_method;
  hf->add_option("--degree", hf_degree, "single degree instead of the table 0..kd-1");
  hf->add_option("--method", hf_method, "proved-k2, conjectured, oracle, duality, series or comp");
  hf->callback([&] {
    action = [&] {
      const Params p = hf_t.params();
      const Method m = detail::method_or_default(hf_method, p);
      if (m == Method::ProvedK2 && p.k() != 2) throw std::invalid_argument("proved-k2 requires k = 2");
      HfReport r{hf_t.triple(), std::string(method_name(m)), hf_degree, {}, is_conjectural(m, p)};
      if (hf_degree) {
        if (*hf_degree < 0) throw std::invalid_argument("--degree must be >= 0");
        r.values.push_back(to_decimal(hf_value(p, *hf_degree, m, g.oracle())));
      } else {
        r.values = decimal_strings(hf_table(p, m, g.oracle()).values);
      }
      render(out, r, g.parsed_format());
      return int(kOk);
    };
  });

  // series
  auto* series = app.add_subcommand("series", "Hilbert series numerator of R over (1-t)^(n+1)")->fallthrough();
  detail::TripleOptions se_t;
  se_t.add_to(series);
  bool from_hf = false;
  std::string se_method;
  series->add_flag("--from-hf", from_hf, "derive the numerator from the Hilbert function table");
  series->add_option("--method", se_method, "engine for --from-hf");
  series->callback([&] {
    action = [&] {
      const Params p = se_t.params();
      SeriesReport r{se_t.triple(), "closed-form", {}, p.n() + 1, false};
      HilbertSeries s;
      if (from_hf) {
        const Method m = detail::method_or_default(se_method, p);
        s = numerator_from_hf(hf_table(p, m, g.oracle()));
        r.source = "from-hf:" + std::string(method_name(m));
        r.conjectural = is_conjectural(m, p);
      } else {
        s = series_closed_form(p);
      }
      for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(0L, s.numerator.degree())); ++i)
        r.numerator.push_back(to_decimal(s.numerator[i]));
      r.denom_exponent = s.denom_exponent;
      render(out, r, g.parsed_format());
      return int(kOk);
    };
  });

  // betti
  auto* bt = app.add_subcommand("betti", "graded Betti numbers of the fat-point ideal")->fallthrough();
  detail::TripleOptions bt_t;
  bt_t.add_to(bt);
  bt->callback([&] {
    action = [&] {
      bt_t.params();
      BettiReport r{bt_t.triple(), {}, {}};
      for (const auto& e : betti(bt_t.n, bt_t.k, bt_t.d).entries) {
        r.betti.push_back(to_decimal(e.value));
        r.shifts.push_back(e.shift);
      }
      render(out, r, g.parsed_format());
      return int(kOk);
    };
  });

  // gens
  auto* gs = app.add_subcommand("gens", "number of minimal generators of I_{n,k,d}")->fallthrough();
  detail::TripleOptions gs_t;
  gs_t.add_to(gs);
  gs->callback([&] {
    action = [&] {
      render(out, GensReport{gs_t.triple(), to_decimal(gens_count(gs_t.params()))}, g.parsed_format());
      return int(kOk);
    };
  });

  // fatpoints
  auto* fp = app.add_subcommand("fatpoints", "Hilbert function and generators of the fat-point scheme")
                 ->fallthrough();
  fp->footer(kPolynomialSyntaxHelp);
  detail::TripleOptions fp_t;
  fp_t.add_to(fp);
  std::optional<long> fp_degree;
  bool fp_oracle = false, fp_gens = false;
  fp->add_option("--degree", fp_degree, "single degree instead of the table up to the regularity index");
  fp->add_flag("--oracle", fp_oracle, "use the interpolation-matrix rank instead of the series");
  fp->add_flag("--gens", fp_gens, "print the ideal generators");
  fp->callback([&] {
    action = [&] {
      fp_t.params();
      const long n = fp_t.n, k = fp_t.k, d = fp_t.d;
      FatReport r{fp_t.triple(), fp_oracle ? "oracle" : "series", fp_degree, {}, {}, to_decimal(multiplicity(n, k, d)),
                  {}};
      const auto s = fat_series(n, k, d);
      for (long i = 0; i <= s.numerator.degree(); ++i) r.numerator.push_back(to_decimal(s.numerator[i]));
      if (fp_gens)
        for (const auto& q : fat_generators(n, k, d)) r.generators.push_back(q.to_string());
      if (fp_degree && *fp_degree < 0) throw std::invalid_argument("--degree must be >= 0");
      const long lo = fp_degree ? *fp_degree : 0;
      const long hi = fp_degree ? *fp_degree : fat_regularity_index(n, k, d);
      for (long m = lo; m <= hi; ++m)
        r.values.push_back(to_decimal(fp_oracle ? fat_oracle(n, k, d, m, g.oracle()) : fat_hf(n, k, d, m)));
      render(out, r, g.parsed_format());
      return int(kOk);
    };
  });

  // verify
  auto* vf = app.add_subcommand("verify", "compare Hilbert-function engines over a parameter box")->fallthrough();
  std::string v_n, v_k, v_d, v_degrees, v_methods = "conjectured,comp,duality";
  vf->add_option("--n", v_n, "range a:b or a single value")->required();
  vf->add_option("--k", v_k, "range a:b or a single value")->required();
  vf->add_option("--d", v_d, "range a:b or a single value")->required();
  vf->add_option("--degrees", v_degrees, "degree range (default: every degree 0..kd-1)");
  vf->add_option("--methods", v_methods, "comma-separated engines to compare")->capture_default_str();
  vf->callback([&] {
    action = [&] {
      SweepSpec spec;
      spec.n = parse_range(v_n);
      spec.k = parse_range(v_k);
      spec.d = parse_range(v_d);
      if (!v_degrees.empty()) spec.degrees = parse_range(v_degrees);
      spec.methods = detail::parse_method_list(v_methods);
      spec.jobs = g.jobs;
      spec.cache_path = detail::cache_path(g);
      spec.oracle = {g.max_block_entries, 1};
      spec.skip_guarded = g.skip_guarded;
      spec.validate();
      std::unique_ptr<ResultCache> cache;
      if (spec.cache_path) cache = std::make_unique<ResultCache>(*spec.cache_path, err);
      const auto result = run_sweep(spec, cache.get());
      render_sweep(out, spec, result, g.parsed_format());
      return result.summary.exit_code(spec.skip_guarded);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  // a subcommand's --help is handled above; app.parse only returns after a callback ran
  if (!action) return kInvalid;

  try {
    return action();
  } catch (const GuardRefusal& e) {
    err << "error: " << e.what() << '\n';
    return kGuardRefused;
  } catch (const ClosedFormUnavailable& e) {
    err << "error: " << e.what() << " (use --from-hf)\n";
    return kClosedFormUnavailable;
  } catch (const CacheError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace powideal::cli
