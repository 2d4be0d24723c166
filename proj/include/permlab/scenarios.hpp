#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permlab/groebner.hpp"
#include "permlab/report.hpp"

namespace permlab {

/// Optional overrides for a single scenario run. Zero / empty means "use the
/// scenario's documented defaults"; scenarios that sample record their seed.
struct ScenarioArgs {
    size_t d = 0, m = 0, n = 0;
    uint32_t q = 0;
    std::string field;  // Field::parse grammar
    std::string v;      // block-size sequence, e.g. "2,2"
    uint64_t trials = 0;
    uint64_t seed = 0;
    bool has_seed = false;
    GroebnerCache* cache = nullptr;
};

/// Every runnable scenario name, grouped order: identities, containments,
/// enumerations, searches.
std::vector<std::string> scenario_names();

/// Names of the suites accepted by run_suite.
std::vector<std::string> suite_names();

/// Members of one suite ("all" concatenates the other four in order).
std::vector<std::string> suite_members(const std::string& suite);

/// Runs one scenario by name; throws ArgError for unknown names.
ScenarioReport run_scenario(const std::string& name, const ScenarioArgs& args = {});

/// Runs a scenario group serially in registry order. Every randomized member
/// derives its own seed from `seed` and its name, so reports are reproducible
/// and independent of group composition.
SuiteReport run_suite(const std::string& suite, uint64_t seed = 0);

/// The per-scenario seed derivation used by run_suite (FNV-1a fold of the
/// scenario name into the suite seed).
uint64_t derive_seed(uint64_t suite_seed, const std::string& scenario);

/// Field of order q: F_p for prime q, GF(p^k) for proper prime powers.
const Field* field_from_q(uint32_t q);

} // namespace permlab
