#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghstab/classify.hpp"

namespace ghstab {

struct CampaignConfig {
  std::size_t min_degree = 1;
  std::size_t max_degree = 10;
  std::size_t trials = 200;
  std::uint64_t seed = 20240917;
  double quasi_tolerance = kDefaultQuasiTolerance;
  long root_precision = kDefaultRootPrecision;
  /// Worker threads; 0 means hardware concurrency. Results do not depend on it.
  unsigned jobs = 0;

  /// Throws BadConfig: trials >= 1, 1 <= min_degree <= max_degree <= 12.
  void validate() const;
};

struct TrialFailure {
  std::size_t trial = 0;
  std::string message;
  /// Offending inputs in canonical text form, for replay.
  std::map<std::string, std::string> polynomials;
};

struct PropertyResult {
  std::string id;
  std::string description;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool skipped = false;  // degree range below the property's minimum degree
  std::vector<TrialFailure> failures;  // first few only
};

struct OracleAgreement {
  std::size_t corpus = 0;
  /// Exact verdict differs from "max Re(z)/|z| < -tolerance".
  std::size_t disagreements = 0;
  /// Disagreements with the oracle decisively on the other side (|Re z|/|z| >= tolerance).
  std::size_t contradictions = 0;
  /// Disagreements inside the tolerance band: roots within tolerance of the axis.
  std::size_t unresolved = 0;
  /// Disagreement counts by the property that produced the polynomial.
  std::map<std::string, std::size_t> origins;
  /// Corpus members whose verdict against the tolerance differs between the raw
  /// max Re(z) and the relative max Re(z)/|z| used for agreement.
  std::size_t rescaled = 0;
  std::vector<TrialFailure> failures;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<PropertyResult> properties;
  OracleAgreement oracle;
  /// Interior F_j of stable pairs judged QuasiStable rather than Stable.
  std::size_t boundary_sightings = 0;

  bool properties_passed() const;
  bool all_passed() const { return properties_passed() && oracle.disagreements == 0; }
  const PropertyResult* find(const std::string& id) const;
};

/// Identifiers of every property, in execution order.
std::vector<std::string> campaign_property_ids();

/// Deterministic in config.seed: each trial draws from (seed, property index,
/// trial index), so neither thread count nor scheduling changes the report.
CampaignReport run_campaign(const CampaignConfig& config);

nlohmann::json to_json(const CampaignReport& report);

}  // namespace ghstab
