#pragma once

#include <string>
#include <vector>

#include "flatcheck/json_io.hpp"

namespace flatcheck {

struct SuiteConfig {
  std::vector<Ring> rings;  // empty selects the standard family
  std::size_t gen_bound = 2;
  std::size_t rel_bound = 2;
  std::uint64_t seed = 12345;
  std::size_t samples = 200;
  bool corrupt_oracle = false;  // test hook: falsify the oracle comparison to
                                // exercise the failure path
};

struct SuiteResult {
  std::string suite;
  std::uint64_t instances = 0;
  std::vector<json> failures;  // serialized failing instances, first first
  bool pass() const { return failures.empty(); }
};

// The standard test family of rings.
std::vector<Ring> default_ring_family();

// Target rings of at most 9 elements used for universal-property checks.
std::vector<Ring> small_target_rings();

const std::vector<std::string>& suite_names();

// Runs one named suite: th4, th6, th3, lemma2, lemma3, lemma7, remark040,
// prop030, pointwise, theorem1, ringlaws. Throws InputError on an unknown
// name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

json suite_result_to_json(const SuiteResult& result);
SuiteConfig suite_config_from_json(const json& j);

}  // namespace flatcheck
