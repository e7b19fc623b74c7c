#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "format.hpp"

namespace ddlab::app {

struct CriteriaOptions {
    std::uint64_t seed{0};
    std::size_t threads{1};
};

struct CriterionResult {
    int id{0};
    std::string name;
    bool passed{false};   // numeric checks only
    Json metrics = Json::object();
    std::string detail;
    double seconds{0.0};  // wall time, never written to output files
    double budget_seconds{0.0};  // 0: no runtime limit

    bool within_budget() const noexcept { return budget_seconds <= 0.0 || seconds < budget_seconds; }
    bool ok() const noexcept { return passed && within_budget(); }
};

inline constexpr int criteria_count = 10;

// Runs one invariant suite (1..criteria_count). Throws std::out_of_range for
// other ids.
CriterionResult run_criterion(int id, const CriteriaOptions& opts);

std::vector<CriterionResult> run_all_criteria(const CriteriaOptions& opts);

// Deterministic part of a result (no timings) for check.json.
Json criterion_json(const CriterionResult& r);

// One human-readable line: "[PASS] 3 't hooft form: ... (0.12 s)".
std::string summary_line(const CriterionResult& r);

}  // namespace ddlab::app
