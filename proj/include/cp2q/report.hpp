// Machine-readable suite reports.
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "cp2q/uqsu3.hpp"

namespace cp2q {

struct CheckResult {
  std::string name, expected, got;
  bool pass = false;
  std::string witness;
};

struct SuiteReport {
  static constexpr int kSchemaVersion = 1;

  std::string suite;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool pass() const;
  std::size_t failures() const;
  void add(std::string name, bool pass, std::string expected = "", std::string got = "", std::string witness = "");
  void add(const RelationCheck& c);
  void add_all(const std::vector<RelationCheck>& cs);
  /// Exact equality of two printable values.
  template <class T>
  void expect_eq(std::string name, const T& got, const T& want) {
    add(std::move(name), got == want, to_text(want), to_text(got));
  }

  /// Body without wall time unless requested, so equal runs print equal bytes.
  nlohmann::ordered_json to_json(bool with_time = false) const;
  /// One line per check: suite, name, pass, expected, got.
  std::string to_tsv() const;

 private:
  template <class T>
  static std::string to_text(const T& x) {
    if constexpr (std::is_arithmetic_v<T>) return std::to_string(x);
    else if constexpr (std::is_convertible_v<T, std::string>) return std::string(x);
    else return to_string(x);
  }
};

nlohmann::ordered_json engine_versions();

}  // namespace cp2q
