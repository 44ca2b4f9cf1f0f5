#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace ghstab {

/// One checked fact of a fixture file.
struct FactResult {
  std::string fixture;
  std::string kind;
  std::string subject;
  std::string provenance;  // PAPER, TRIVIAL or DERIVED
  std::string expected;
  std::string computed;
  bool passed = false;
};

struct FixtureReport {
  std::vector<FactResult> facts;
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0 && !facts.empty(); }
};

/// Evaluates one fixture document. Malformed documents throw FixtureParse;
/// evaluation errors turn into failed facts.
FixtureReport evaluate_fixture(const nlohmann::json& fixture);

/// Every *.json file in `directory`, in filename order.
FixtureReport run_fixtures(const std::filesystem::path& directory = GHSTAB_FIXTURE_DIR);

nlohmann::json to_json(const FixtureReport& report);

}  // namespace ghstab
