#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace klab {

/// Configuration of one verification suite run. Zero-valued numeric fields
/// fall back to per-suite defaults from the registry.
struct SuiteConfig {
    std::string suite;
    std::string metric_id;
    std::string family_id;
    int samples = 0;
    std::uint64_t seed = 7;
    double tol = 0.0;
    double step = 0.0;
    std::string out_path;
    std::string format = "json";
};

struct CaseResult {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    std::vector<std::pair<std::string, double>> residuals;
    std::string error; // empty unless the case aborted
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CaseResult> cases;
    std::string version;
    double wall_time_ms = 0.0;

    bool all_pass() const;
    /// Deterministic for a fixed config and seed once the timing field is
    /// excluded.
    std::string to_json(bool include_wall_time = true) const;
    std::string to_csv() const;
};

struct SuiteInfo {
    std::string id;
    std::string description;
    std::string default_metric; // or family id for the family suites
    int default_samples = 50;
    double default_tol = 1e-6;
};

const std::vector<SuiteInfo>& suite_registry();

/// Executes the named suite. Throws PreconditionError for unknown ids or bad
/// configuration; per-case runtime errors are recorded as failed cases.
VerificationReport run_suite(const SuiteConfig& config);

} // namespace klab
