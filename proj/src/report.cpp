#include "cp2q/report.hpp"

#include <gmp.h>

#include <algorithm>
#include <sstream>

namespace cp2q {

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

void SuiteReport::add(std::string name, bool pass, std::string expected, std::string got, std::string witness) {
  checks.push_back({std::move(name), std::move(expected), std::move(got), pass, std::move(witness)});
}

void SuiteReport::add(const RelationCheck& c) { add(c.name, c.pass, "0", c.pass ? "0" : "nonzero", c.witness); }

void SuiteReport::add_all(const std::vector<RelationCheck>& cs) {
  for (const auto& c : cs) add(c);
}

nlohmann::ordered_json SuiteReport::to_json(bool with_time) const {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = suite;
  j["params"] = params;
  j["pass"] = pass();
  j["failures"] = failures();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["expected"] = c.expected;
    e["got"] = c.got;
    e["pass"] = c.pass;
    if (!c.witness.empty()) e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["engines"] = engine_versions();
  if (with_time) j["seconds"] = seconds;
  return j;
}

std::string SuiteReport::to_tsv() const {
  std::ostringstream out;
  for (const auto& c : checks)
    out << suite << '\t' << c.name << '\t' << (c.pass ? "pass" : "FAIL") << '\t' << c.expected << '\t' << c.got << '\n';
  return out.str();
}

nlohmann::ordered_json engine_versions() {
  nlohmann::ordered_json j;
  j["cp2q"] = "1.0.0";
  j["gmp"] = gmp_version;
  j["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                       std::to_string(NLOHMANN_JSON_VERSION_PATCH);
  return j;
}

}  // namespace cp2q
