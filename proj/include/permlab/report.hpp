#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace permlab {

/// Outcome of one scenario. `evidence` marks finite-field-only confirmations
/// of characteristic-zero statements; everything asserted exactly is `pass`.
enum class ScenarioStatus { pass, evidence, budget_exceeded, fail };

std::string status_str(ScenarioStatus s);
ScenarioStatus parse_status(const std::string& text);

/// fail beats budget-exceeded beats evidence beats pass.
ScenarioStatus worst_status(ScenarioStatus a, ScenarioStatus b);

/// Machine-readable result of one named check. Parameters and counts keep
/// insertion order so serialized reports are stable across runs.
struct ScenarioReport {
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> params;
    ScenarioStatus status = ScenarioStatus::pass;
    std::vector<std::pair<std::string, long long>> counts;
    std::vector<std::string> findings;
    std::vector<std::string> artifacts;
    long long runtime_ms = 0;
    std::optional<uint64_t> seed;

    void param(const std::string& key, const std::string& value);
    void param(const std::string& key, long long value);
    void count(const std::string& key, long long value);
    void note(const std::string& text);

    /// Record a hard assertion: on violation the status drops to fail and the
    /// description is appended to findings.
    void require(bool ok, const std::string& description);

    /// Downgrade an exact pass to finite-field evidence.
    void mark_evidence();
    void mark_budget(const std::string& description);

    nlohmann::ordered_json to_json() const;
    static ScenarioReport from_json(const nlohmann::ordered_json& j);

    /// One-line human summary (status, scenario, key counts).
    std::string summary_line() const;
};

/// Aggregate over a scenario group; status is the worst member status.
struct SuiteReport {
    std::string suite;
    ScenarioStatus status = ScenarioStatus::pass;
    std::vector<ScenarioReport> scenarios;
    long long runtime_ms = 0;
    std::optional<uint64_t> seed;

    void add(ScenarioReport rep);
    nlohmann::ordered_json to_json() const;
};

/// Serialized report with every runtime_ms field recursively removed, for
/// byte-level determinism comparisons.
std::string stable_text(const nlohmann::ordered_json& j);

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace permlab
