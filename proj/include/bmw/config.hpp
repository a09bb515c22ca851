#pragma once

#include "bmw/optimizer.hpp"
#include "bmw/types.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmw {

// Raised on malformed or unknown configuration input. The CLI maps this
// (and usage errors) to exit code 2.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key=value configuration. '#' starts a comment; blank lines are
// ignored; keys are validated against the known set to catch typos.
class RunConfig {
 public:
  static RunConfig parse_text(const std::string& text);
  static RunConfig load_file(const std::string& path);

  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  std::string get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  long get_long(const std::string& key) const;
  long get_long_or(const std::string& key, long fallback) const;
  std::uint64_t get_seed_or(std::uint64_t fallback) const;
  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<int> get_int_list(const std::string& key) const;

  // Typed views assembled from several keys.
  ChannelParams channel() const;            // lambda_m, lambda_w, power_p, ...
  CodeDesign design() const;                // n, thresholds, alphas
  SearchMode search_mode() const;           // mode = uniform | free
  std::optional<std::string> output_path() const;

  const std::map<std::string, std::string>& values() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

} // namespace bmw
