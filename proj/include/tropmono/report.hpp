#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropmono/json_io.hpp"

namespace tropmono {

struct Check {
  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  long cases = 0;
  std::string witness; // set for every failure
};

/// Folds `ok` into the check; the first failure's witness is kept.
inline void record(Check &c, bool ok, const std::string &witness_if_failed) {
  ++c.cases;
  if (!ok && c.passed) {
    c.passed = false;
    c.witness = witness_if_failed;
  }
}

inline bool all_passed(const std::vector<Check> &checks) {
  for (const auto &c : checks)
    if (!c.passed) return false;
  return true;
}

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a64(const std::string &bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct InputDigest {
  std::string role;
  std::string path;
  std::string fnv1a64;
};

struct RunReport {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::vector<InputDigest> inputs;
  std::vector<Check> checks;
  Json result = Json::object();
  int exit_code = 0;

  void finalize() { exit_code = all_passed(checks) ? 0 : 1; }

  [[nodiscard]] Json to_json() const {
    Json j;
    j["command"] = command;
    if (seed) j["seed"] = *seed;
    Json in = Json::array();
    for (const auto &d : inputs) in.push_back(Json{{"role", d.role}, {"path", d.path}, {"fnv1a64", d.fnv1a64}});
    j["inputs"] = in;
    Json cs = Json::array();
    for (const auto &c : checks) {
      Json o{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"cases", c.cases}};
      if (!c.passed) o["witness"] = c.witness;
      cs.push_back(std::move(o));
    }
    j["checks"] = cs;
    j["result"] = result;
    j["exitCode"] = exit_code;
    return j;
  }

  [[nodiscard]] std::string render(const std::string &format) const {
    if (format == "tsv") {
      std::string out = "# command\t" + command + "\n";
      if (seed) out += "# seed\t" + std::to_string(*seed) + "\n";
      for (const auto &d : inputs) out += "# input\t" + d.role + "\t" + d.path + "\t" + d.fnv1a64 + "\n";
      out += "name\tstatus\tcases\twitness\n";
      for (const auto &c : checks) {
        std::string w = c.witness;
        for (auto &ch : w)
          if (ch == '\t' || ch == '\n') ch = ' ';
        out += c.name + "\t" + (c.passed ? "pass" : "fail") + "\t" + std::to_string(c.cases) + "\t" + w + "\n";
      }
      out += "# result\t" + result.dump() + "\n";
      out += "# exit\t" + std::to_string(exit_code) + "\n";
      return out;
    }
    return to_json().dump(2) + "\n";
  }
};

} // namespace tropmono
