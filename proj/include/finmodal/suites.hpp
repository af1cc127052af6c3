#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace finmodal {

struct SuiteCaps {
  int frame_points = 4;
  int space_points = 4;
  int samples = 200;               // sampled suites
  int formulas_per_instance = 0;   // validity-transfer checks per glue
  int k = 0;                       // lemma6 target; 0 means both 2 and 3
  std::uint64_t seed = 20260810;
  int bit_budget = 24;
};

/// Outcome of one registered property. A property whose hypothesis
/// never fired at the tested sizes reports VACUOUS instead of silently
/// passing; FAIL always carries a replayable witness.
struct Report {
  std::string id;
  long long instances = 0;  // instances examined
  long long coverage = 0;   // instances where the antecedent held
  enum class Verdict { PASS, FAIL, VACUOUS } verdict = Verdict::PASS;
  std::string detail;
  nlohmann::json witness;
  std::uint64_t seed = 0;

  bool failed() const { return verdict == Verdict::FAIL; }
};

const std::vector<std::string>& suite_ids();

/// Runs one registered suite; throws std::invalid_argument on an
/// unknown id.
Report run_suite(const std::string& id, const SuiteCaps& caps);

/// Runs one suite, or all of them for id "all".
std::vector<Report> run_property_suite(const std::string& id,
                                       const SuiteCaps& caps);

std::string report_to_text(const Report& r);
nlohmann::json report_to_json(const Report& r);

}  // namespace finmodal
