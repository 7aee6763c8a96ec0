#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scate/common.hpp"

namespace scate {

// Flat key=value configuration. Sections are dotted prefixes
// ("world.seed = 7"). '#' starts a comment. Unknown keys are rejected
// by validate_keys so a typo never silently falls back to a default.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;

  static KeyValueConfig from_string(const std::string& text) {
    KeyValueConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      cfg.parse_line(line, lineno);
    }
    return cfg;
  }

  static KeyValueConfig from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string get_string(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw InvalidConfigError("missing config key: " + key);
    return it->second;
  }

  std::string get_string(const std::string& key, const std::string& dflt) const {
    auto it = values_.find(key);
    return it == values_.end() ? dflt : it->second;
  }

  double get_double(const std::string& key) const { return parse_double(get_string(key)); }
  double get_double(const std::string& key, double dflt) const {
    return has(key) ? parse_double(get_string(key)) : dflt;
  }
  long long get_int(const std::string& key) const { return parse_int(get_string(key)); }
  long long get_int(const std::string& key, long long dflt) const {
    return has(key) ? parse_int(get_string(key)) : dflt;
  }
  bool get_bool(const std::string& key, bool dflt) const {
    if (!has(key)) return dflt;
    const std::string v = get_string(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw InvalidConfigError("not a boolean: " + key + "=" + v);
  }

  // Throws naming the first offending key; also reports missing required keys.
  void validate_keys(const std::set<std::string>& allowed,
                     const std::set<std::string>& required = {}) const {
    for (const auto& [k, v] : values_) {
      (void)v;
      if (!allowed.count(k)) throw InvalidConfigError("unknown config key: " + k);
    }
    for (const auto& k : required) {
      if (!values_.count(k)) throw InvalidConfigError("missing config key: " + k);
    }
  }

  const std::map<std::string, std::string>& values() const { return values_; }

  void set(const std::string& key, const std::string& value) { values_[key] = value; }

 private:
  void parse_line(const std::string& raw, int lineno) {
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    size_t b = 0, e = line.size();
    while (b < e && is_space(line[b])) ++b;
    while (e > b && is_space(line[e - 1])) --e;
    line = line.substr(b, e - b);
    if (line.empty()) return;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidConfigError("malformed config line " + std::to_string(lineno) + ": " + line);
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    while (!key.empty() && is_space(key.back())) key.pop_back();
    size_t v = 0;
    while (v < val.size() && is_space(val[v])) ++v;
    val = val.substr(v);
    if (key.empty()) throw InvalidConfigError("empty key in config line " + std::to_string(lineno));
    values_[key] = val;
  }

  std::map<std::string, std::string> values_;
};

}  // namespace scate
