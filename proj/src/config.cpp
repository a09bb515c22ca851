#include "bmw/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace bmw {

namespace {

const char* const kKnownKeys[] = {
    "lambda_m",  "lambda_w",  "power_p",          "jam_j",
    "noise_var", "n",         "thresholds",       "alphas",
    "mode",      "n_list",    "power_grid",       "seed",
    "output",    "eve_q",     "frames",           "symbols_per_frame",
    "epsilon",   "budget",    "q_estimate_noise",
};

bool known_key(const std::string& k) {
  return std::find(std::begin(kKnownKeys), std::end(kKnownKeys), k) !=
         std::end(kKnownKeys);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0' || errno == ERANGE) {
    throw config_error("key '" + key + "': not a number: '" + v + "'");
  }
  return d;
}

long parse_long(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const long d = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0' || errno == ERANGE) {
    throw config_error("key '" + key + "': not an integer: '" + v + "'");
  }
  return d;
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(v);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

} // namespace

RunConfig RunConfig::parse_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw config_error("line " + std::to_string(lineno) +
                         ": expected key=value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw config_error("line " + std::to_string(lineno) + ": empty key");
    }
    if (!known_key(key)) {
      throw config_error("line " + std::to_string(lineno) + ": unknown key '" +
                         key + "'");
    }
    if (cfg.kv_.count(key)) {
      throw config_error("line " + std::to_string(lineno) + ": duplicate key '" +
                         key + "'");
    }
    cfg.kv_[key] = value;
  }
  return cfg;
}

RunConfig RunConfig::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

bool RunConfig::has(const std::string& key) const { return kv_.count(key) > 0; }

void RunConfig::set(const std::string& key, const std::string& value) {
  if (!known_key(key)) throw config_error("unknown key '" + key + "'");
  kv_[key] = value;
}

std::string RunConfig::get_string(const std::string& key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) throw config_error("missing required key '" + key + "'");
  return it->second;
}

double RunConfig::get_double(const std::string& key) const {
  return parse_double(key, get_string(key));
}

double RunConfig::get_double_or(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long RunConfig::get_long(const std::string& key) const {
  return parse_long(key, get_string(key));
}

long RunConfig::get_long_or(const std::string& key, long fallback) const {
  return has(key) ? get_long(key) : fallback;
}

std::uint64_t RunConfig::get_seed_or(std::uint64_t fallback) const {
  if (!has("seed")) return fallback;
  const long s = get_long("seed");
  if (s < 0) throw config_error("seed must be >= 0");
  return static_cast<std::uint64_t>(s);
}

std::vector<double> RunConfig::get_double_list(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split_list(get_string(key))) {
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) throw config_error("key '" + key + "': empty list");
  return out;
}

std::vector<int> RunConfig::get_int_list(const std::string& key) const {
  std::vector<int> out;
  for (const auto& item : split_list(get_string(key))) {
    out.push_back(static_cast<int>(parse_long(key, item)));
  }
  if (out.empty()) throw config_error("key '" + key + "': empty list");
  return out;
}

ChannelParams RunConfig::channel() const {
  ChannelParams p;
  p.lambda_m = get_double("lambda_m");
  p.lambda_w = get_double("lambda_w");
  p.power_p = get_double("power_p");
  p.jam_j = get_double_or("jam_j", 0.0);
  p.noise_var = get_double_or("noise_var", 1.0);
  return p;
}

CodeDesign RunConfig::design() const {
  CodeDesign d;
  d.n = static_cast<int>(get_long("n"));
  if (d.n > 1) {
    d.thresholds = get_double_list("thresholds");
    d.alphas = get_double_list("alphas");
  } else {
    if (has("thresholds") && !get_string("thresholds").empty()) {
      throw config_error("thresholds given for a single-level design");
    }
    if (has("alphas") && !get_string("alphas").empty()) {
      throw config_error("alphas given for a single-level design");
    }
  }
  return d;
}

SearchMode RunConfig::search_mode() const {
  const std::string m = get_string("mode");
  if (m == "uniform") return SearchMode::Uniform;
  if (m == "free") return SearchMode::Free;
  throw config_error("mode must be 'uniform' or 'free', got '" + m + "'");
}

std::optional<std::string> RunConfig::output_path() const {
  if (!has("output")) return std::nullopt;
  return get_string("output");
}

} // namespace bmw
