#pragma once

// Report types printed by the command-line tool, with their JSON, CSV and
// plain-text renderings. Every number that can grow is a decimal string.

#include <powideal/fatpoints.hpp>
#include <powideal/hilbert.hpp>

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace powideal::cli {

using nlohmann::json;

enum class Format { Text, Json, Csv };

inline std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return std::nullopt;
}

inline constexpr const char* kCsvHeader = "n,k,d,degree,method,value";

struct ParamsTriple {
  long n = 0, k = 0, d = 0;
  friend bool operator==(const ParamsTriple&, const ParamsTriple&) = default;
};

inline void to_json(json& j, const ParamsTriple& p) { j = json{{"n", p.n}, {"k", p.k}, {"d", p.d}}; }
inline void from_json(const json& j, ParamsTriple& p) {
  j.at("n").get_to(p.n);
  j.at("k").get_to(p.k);
  j.at("d").get_to(p.d);
}

inline std::vector<std::string> decimal_strings(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

inline std::string join(const std::vector<std::string>& items, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

inline void write_csv_row(std::ostream& os, const ParamsTriple& p, long degree, const std::string& method,
                          const std::string& value) {
  os << p.n << ',' << p.k << ',' << p.d << ',' << degree << ',' << method << ',' << value << '\n';
}

/// Hilbert function of R_{n,k,d}: the whole table, or one degree.
struct HfReport {
  ParamsTriple params;
  std::string method;
  std::optional<long> degree;       // set when a single value was requested
  std::vector<std::string> values;  // degrees 0..kd-1, or the single value
  bool conjectural = false;
  friend bool operator==(const HfReport&, const HfReport&) = default;
};

inline void to_json(json& j, const HfReport& r) {
  j = json{{"params", r.params}, {"method", r.method}, {"values", r.values}, {"conjectural", r.conjectural}};
  if (r.degree) j["degree"] = *r.degree;
}
inline void from_json(const json& j, HfReport& r) {
  j.at("params").get_to(r.params);
  j.at("method").get_to(r.method);
  j.at("values").get_to(r.values);
  j.at("conjectural").get_to(r.conjectural);
  r.degree = j.contains("degree") ? std::optional<long>(j.at("degree").get<long>()) : std::nullopt;
}

inline void render(std::ostream& os, const HfReport& r, Format f) {
  switch (f) {
    case Format::Json: os << json(r).dump() << '\n'; break;
    case Format::Csv:
      os << kCsvHeader << '\n';
      for (std::size_t i = 0; i < r.values.size(); ++i)
        write_csv_row(os, r.params, r.degree ? *r.degree : static_cast<long>(i), r.method, r.values[i]);
      break;
    case Format::Text:
      os << join(r.values) << '\n';
      if (r.conjectural) os << "(conjectural)\n";
      break;
  }
}

/// Numerator of a Hilbert series over (1-t)^{denom_exponent}.
struct SeriesReport {
  ParamsTriple params;
  std::string source;  // "closed-form" or "from-hf:<method>"
  std::vector<std::string> numerator;
  long denom_exponent = 0;
  bool conjectural = false;
  friend bool operator==(const SeriesReport&, const SeriesReport&) = default;
};

inline void to_json(json& j, const SeriesReport& r) {
  j = json{{"params", r.params},
           {"source", r.source},
           {"numerator", r.numerator},
           {"denom_exponent", r.denom_exponent},
           {"conjectural", r.conjectural}};
}
inline void from_json(const json& j, SeriesReport& r) {
  j.at("params").get_to(r.params);
  j.at("source").get_to(r.source);
  j.at("numerator").get_to(r.numerator);
  j.at("denom_exponent").get_to(r.denom_exponent);
  j.at("conjectural").get_to(r.conjectural);
}

inline void render(std::ostream& os, const SeriesReport& r, Format f) {
  switch (f) {
    case Format::Json: os << json(r).dump() << '\n'; break;
    case Format::Csv:
      os << kCsvHeader << '\n';
      for (std::size_t i = 0; i < r.numerator.size(); ++i)
        write_csv_row(os, r.params, static_cast<long>(i), "numerator", r.numerator[i]);
      break;
    case Format::Text:
      os << "numerator: " << join(r.numerator) << '\n';
      os << "denominator: (1-t)^" << r.denom_exponent << '\n';
      if (r.conjectural) os << "(conjectural)\n";
      break;
  }
}

struct BettiReport {
  ParamsTriple params;
  std::vector<std::string> betti;
  std::vector<long> shifts;
  friend bool operator==(const BettiReport&, const BettiReport&) = default;
};

inline void to_json(json& j, const BettiReport& r) {
  j = json{{"params", r.params}, {"betti", r.betti}, {"shifts", r.shifts}};
}
inline void from_json(const json& j, BettiReport& r) {
  j.at("params").get_to(r.params);
  j.at("betti").get_to(r.betti);
  j.at("shifts").get_to(r.shifts);
}

inline void render(std::ostream& os, const BettiReport& r, Format f) {
  switch (f) {
    case Format::Json: os << json(r).dump() << '\n'; break;
    case Format::Csv:
      os << kCsvHeader << '\n';
      for (std::size_t i = 0; i < r.betti.size(); ++i) write_csv_row(os, r.params, r.shifts[i], "betti", r.betti[i]);
      break;
    case Format::Text: {
      std::vector<std::string> shifts;
      for (long s : r.shifts) shifts.push_back(std::to_string(s));
      os << "betti: " << join(r.betti) << '\n' << "shifts: " << join(shifts) << '\n';
      break;
    }
  }
}

struct GensReport {
  ParamsTriple params;
  std::string count;
  friend bool operator==(const GensReport&, const GensReport&) = default;
};

inline void to_json(json& j, const GensReport& r) { j = json{{"params", r.params}, {"count", r.count}}; }
inline void from_json(const json& j, GensReport& r) {
  j.at("params").get_to(r.params);
  j.at("count").get_to(r.count);
}

inline void render(std::ostream& os, const GensReport& r, Format f) {
  switch (f) {
    case Format::Json: os << json(r).dump() << '\n'; break;
    case Format::Csv:
      os << kCsvHeader << '\n';
      write_csv_row(os, r.params, r.params.d * (r.params.k - 1), "gens", r.count);
      break;
    case Format::Text: os << r.count << '\n'; break;
  }
}

/// Fat-point scheme report: Hilbert function (table or one degree), the
/// series numerator, multiplicity and optionally the generators.
struct FatReport {
  ParamsTriple params;
  std::string method;  // "series" or "oracle"
  std::optional<long> degree;
  std::vector<std::string> values;
  std::vector<std::string> numerator;
  std::string multiplicity;
  std::vector<std::string> generators;
  friend bool operator==(const FatReport&, const FatReport&) = default;
};

inline void to_json(json& j, const FatReport& r) {
  j = json{{"params", r.params},       {"method", r.method},           {"values", r.values},
           {"numerator", r.numerator}, {"multiplicity", r.multiplicity}, {"generators", r.generators}};
  if (r.degree) j["degree"] = *r.degree;
}
inline void from_json(const json& j, FatReport& r) {
  j.at("params").get_to(r.params);
  j.at("method").get_to(r.method);
  j.at("values").get_to(r.values);
  j.at("numerator").get_to(r.numerator);
  j.at("multiplicity").get_to(r.multiplicity);
  j.at("generators").get_to(r.generators);
  r.degree = j.contains("degree") ? std::optional<long>(j.at("degree").get<long>()) : std::nullopt;
}

inline void render(std::ostream& os, const FatReport& r, Format f) {
  switch (f) {
    case Format::Json: os << json(r).dump() << '\n'; break;
    case Format::Csv:
      os << kCsvHeader << '\n';
      for (std::size_t i = 0; i < r.values.size(); ++i)
        write_csv_row(os, r.params, r.degree ? *r.degree : static_cast<long>(i), "fat-" + r.method, r.values[i]);
      break;
    case Format::Text:
      if (!r.generators.empty()) {
        for (const auto& g : r.generators) os << g << '\n';
        break;
      }
      os << join(r.values) << '\n';
      if (!r.degree) {
        os << "numerator: " << join(r.numerator) << '\n';
        os << "multiplicity: " << r.multiplicity << '\n';
      }
      break;
  }
}

}  // namespace powideal::cli
