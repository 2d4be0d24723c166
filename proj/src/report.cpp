#include "permlab/report.hpp"

#include "permlab/error.hpp"

namespace permlab {

std::string status_str(ScenarioStatus s) {
    switch (s) {
    case ScenarioStatus::pass: return "pass";
    case ScenarioStatus::evidence: return "evidence";
    case ScenarioStatus::budget_exceeded: return "budget-exceeded";
    case ScenarioStatus::fail: return "fail";
    }
    return "fail";
}

ScenarioStatus parse_status(const std::string& text) {
    if (text == "pass") return ScenarioStatus::pass;
    if (text == "evidence") return ScenarioStatus::evidence;
    if (text == "budget-exceeded") return ScenarioStatus::budget_exceeded;
    if (text == "fail") return ScenarioStatus::fail;
    throw ArgError("unknown status: " + text);
}

ScenarioStatus worst_status(ScenarioStatus a, ScenarioStatus b) {
    return (int)a >= (int)b ? a : b;
}

void ScenarioReport::param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
}

void ScenarioReport::param(const std::string& key, long long value) {
    params.emplace_back(key, std::to_string(value));
}

void ScenarioReport::count(const std::string& key, long long value) {
    counts.emplace_back(key, value);
}

void ScenarioReport::note(const std::string& text) { findings.push_back(text); }

void ScenarioReport::require(bool ok, const std::string& description) {
    if (!ok) {
        status = worst_status(status, ScenarioStatus::fail);
        findings.push_back("FAILED: " + description);
    }
}

void ScenarioReport::mark_evidence() {
    status = worst_status(status, ScenarioStatus::evidence);
}

void ScenarioReport::mark_budget(const std::string& description) {
    status = worst_status(status, ScenarioStatus::budget_exceeded);
    findings.push_back("BUDGET: " + description);
}

nlohmann::ordered_json ScenarioReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["scenario"] = scenario;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = std::move(p);
    j["status"] = status_str(status);
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (const auto& [k, v] : counts) c[k] = v;
    j["counts"] = std::move(c);
    j["findings"] = findings;
    j["artifacts"] = artifacts;
    j["runtime_ms"] = runtime_ms;
    if (seed) j["seed"] = *seed;
    return j;
}

ScenarioReport ScenarioReport::from_json(const nlohmann::ordered_json& j) {
    ScenarioReport rep;
    rep.scenario = j.at("scenario").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        rep.params.emplace_back(k, v.get<std::string>());
    rep.status = parse_status(j.at("status").get<std::string>());
    for (const auto& [k, v] : j.at("counts").items())
        rep.counts.emplace_back(k, v.get<long long>());
    rep.findings = j.at("findings").get<std::vector<std::string>>();
    rep.artifacts = j.at("artifacts").get<std::vector<std::string>>();
    rep.runtime_ms = j.at("runtime_ms").get<long long>();
    if (j.contains("seed")) rep.seed = j.at("seed").get<uint64_t>();
    return rep;
}

std::string ScenarioReport::summary_line() const {
    std::string line = status_str(status) + "  " + scenario;
    for (const auto& [k, v] : counts) line += "  " + k + "=" + std::to_string(v);
    return line;
}

void SuiteReport::add(ScenarioReport rep) {
    status = worst_status(status, rep.status);
    scenarios.push_back(std::move(rep));
}

nlohmann::ordered_json SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["status"] = status_str(status);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& s : scenarios) list.push_back(s.to_json());
    j["scenarios"] = std::move(list);
    j["runtime_ms"] = runtime_ms;
    if (seed) j["seed"] = *seed;
    return j;
}

namespace {

void strip_runtime(nlohmann::ordered_json& j) {
    if (j.is_object()) {
        j.erase("runtime_ms");
        for (auto& [k, v] : j.items()) strip_runtime(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_runtime(v);
    }
}

} // namespace

std::string stable_text(const nlohmann::ordered_json& j) {
    nlohmann::ordered_json copy = j;
    strip_runtime(copy);
    return copy.dump(2);
}

} // namespace permlab
