#pragma once

// Flat key = value configuration with [section] headers. Keys are addressed
// as "section.key"; every key must appear in the schema the engine declares.
//
//   # comment            ; comment
//   [grid]
//   n = 256
//   length = 12          # trailing comments are allowed

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "logent/errors.hpp"
#include "logent/io.hpp"

namespace logent::cli {

struct KeySpec {
  std::string name;
  std::string default_value;
  std::string help; // units or allowed values
};

class RunConfig {
public:
  explicit RunConfig(std::vector<KeySpec> schema) : schema_(std::move(schema)) {
    for (const auto &k : schema_)
      values_[k.name] = k.default_value;
  }

  void load(std::istream &in, const std::string &origin) {
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto where = origin + ":" + std::to_string(lineno);
      const auto hash = line.find_first_of("#;");
      if (hash != std::string::npos)
        line.erase(hash);
      line = trim(line);
      if (line.empty())
        continue;
      if (line.front() == '[') {
        if (line.back() != ']')
          throw invalid_input(where + ": unterminated section header");
        section = trim(line.substr(1, line.size() - 2));
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw invalid_input(where + ": expected 'key = value'");
      const auto key = trim(line.substr(0, eq));
      set((section.empty() ? "" : section + ".") + key,
          trim(line.substr(eq + 1)), where);
    }
  }

  void load_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
      throw invalid_input("cannot open config file '" + path + "'");
    load(in, path);
  }

  /// "section.key=value" from the command line.
  void apply_override(const std::string &assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
      throw invalid_input("--set expects section.key=value, got '" +
                          assignment + "'");
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)),
        "--set");
  }

  const std::string &text(const std::string &key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
      throw invalid_input("internal: key '" + key + "' not in schema");
    return it->second;
  }

  double number(const std::string &key) const {
    try {
      return io::parse_number(text(key));
    } catch (const invalid_input &) {
      throw invalid_input(key + ": expected a number, got '" + text(key) + "'");
    }
  }

  std::size_t count(const std::string &key) const {
    const double v = number(key);
    if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v)))
      throw invalid_input(key + ": expected a positive integer, got '" +
                          text(key) + "'");
    return static_cast<std::size_t>(v);
  }

  std::vector<double> list(const std::string &key) const {
    if (text(key).empty())
      return {};
    try {
      return io::parse_list(text(key));
    } catch (const invalid_input &) {
      throw invalid_input(key + ": expected a comma-separated list of numbers");
    }
  }

  bool flag(const std::string &key) const {
    const auto &v = text(key);
    if (v == "true" || v == "yes" || v == "1")
      return true;
    if (v == "false" || v == "no" || v == "0")
      return false;
    throw invalid_input(key + ": expected true or false, got '" + v + "'");
  }

  const std::vector<KeySpec> &schema() const noexcept { return schema_; }

private:
  static std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
      return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  void set(const std::string &key, const std::string &value,
           const std::string &where) {
    const auto it = values_.find(key);
    if (it == values_.end()) {
      std::string known;
      for (const auto &k : schema_)
        known += (known.empty() ? "" : ", ") + k.name;
      throw invalid_input(where + ": unknown key '" + key + "' (known: " +
                          known + ")");
    }
    it->second = value;
  }

  std::vector<KeySpec> schema_;
  std::map<std::string, std::string> values_;
};

} // namespace logent::cli
