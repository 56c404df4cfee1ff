#pragma once

// Append-only result cache: one JSON object per line. A damaged final line
// (an interrupted write) is dropped with a warning and the file is truncated
// back to the last complete record.

#include <powideal/numerics.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace powideal::cli {

inline constexpr const char* kToolVersion = "1.0.0";

struct VerificationRecord {
  long n = 0, k = 0, d = 0;
  long degree = 0;
  std::string method;
  std::string value;  // exact decimal
  std::optional<std::vector<std::string>> agrees_with;
  long long timestamp = 0;  // UTC seconds
  std::string tool_version = kToolVersion;

  using Key = std::tuple<long, long, long, long, std::string>;
  Key key() const { return {n, k, d, degree, method}; }

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

inline void to_json(nlohmann::json& j, const VerificationRecord& r) {
  j = nlohmann::json{{"n", r.n},
                     {"k", r.k},
                     {"d", r.d},
                     {"degree", r.degree},
                     {"method", r.method},
                     {"value", r.value},
                     {"timestamp", r.timestamp},
                     {"tool_version", r.tool_version}};
  j["agrees_with"] = r.agrees_with ? nlohmann::json(*r.agrees_with) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, VerificationRecord& r) {
  j.at("n").get_to(r.n);
  j.at("k").get_to(r.k);
  j.at("d").get_to(r.d);
  j.at("degree").get_to(r.degree);
  j.at("method").get_to(r.method);
  j.at("value").get_to(r.value);
  j.at("timestamp").get_to(r.timestamp);
  j.at("tool_version").get_to(r.tool_version);
  const auto& a = j.at("agrees_with");
  r.agrees_with = a.is_null() ? std::nullopt : std::optional(a.get<std::vector<std::string>>());
  from_decimal(r.value);  // must parse back to an exact integer
}

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResultCache {
 public:
  /// Opens (creating if needed) the cache at `path`, replaying existing records.
  ResultCache(std::filesystem::path path, std::ostream& warnings) : path_(std::move(path)) {
    if (std::filesystem::exists(path_)) replay(warnings);
    out_.open(path_, std::ios::app | std::ios::binary);
    if (!out_) throw CacheError("cannot open cache file for appending: " + path_.string());
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return records_.size();
  }

  std::optional<VerificationRecord> find(const VerificationRecord::Key& key) const {
    std::lock_guard lock(mutex_);
    auto it = records_.find(key);
    if (it == records_.end()) return std::nullopt;
    return it->second;
  }

  /// Appends unless the key is already present; returns whether it was written.
  bool append(const VerificationRecord& r) {
    std::lock_guard lock(mutex_);
    if (records_.count(r.key())) return false;
    out_ << nlohmann::json(r).dump() << '\n';
    out_.flush();
    if (!out_) throw CacheError("write to cache failed: " + path_.string());
    records_.emplace(r.key(), r);
    return true;
  }

 private:
  void replay(std::ostream& warnings) {
    std::string content;
    {
      std::ifstream in(path_, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      content = ss.str();
    }
    std::size_t pos = 0, good_end = 0;
    while (pos < content.size()) {
      const std::size_t nl = content.find('\n', pos);
      const bool terminated = nl != std::string::npos;
      const std::size_t end = terminated ? nl : content.size();
      const std::string line = content.substr(pos, end - pos);
      const std::size_t next = terminated ? nl + 1 : content.size();
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        pos = next;
        if (terminated) good_end = next;
        continue;
      }
      try {
        if (!terminated) throw std::runtime_error("unterminated line");
        auto rec = nlohmann::json::parse(line).get<VerificationRecord>();
        records_.insert_or_assign(rec.key(), std::move(rec));
        good_end = next;
      } catch (const std::exception& e) {
        if (content.find_first_not_of(" \t\r\n", next) != std::string::npos)
          throw CacheError("corrupt record in the middle of " + path_.string() + " at byte " + std::to_string(pos));
        warnings << "warning: dropping damaged trailing record in " << path_.string() << " (" << e.what() << ")\n";
        std::filesystem::resize_file(path_, good_end);
        return;
      }
      pos = next;
    }
  }

  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<VerificationRecord::Key, VerificationRecord> records_;
  std::ofstream out_;
};

}  // namespace powideal::cli
