#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dglpp/lpp.hpp"
#include "dglpp/plancherel.hpp"

namespace dglpp {

enum class CheckMode { Exact, Bounded, Statistical };
enum class CheckStatus { Pass, Fail, BudgetExceeded };

struct CheckRecord {
    std::string id;
    std::string statement;  // the claim being verified, self-documenting
    CheckMode mode = CheckMode::Exact;
    CheckStatus status = CheckStatus::Fail;
    std::string witness;
};

struct SuiteConfig {
    enum class Size { Small, Medium };

    Size size = Size::Medium;
    std::uint64_t seed = 987654321;
    std::uint64_t oracle_budget = kDefaultOracleBudget;
    std::uint64_t word_budget = kDefaultWordBudget;

    // Size-derived knobs.
    int max_mn() const { return size == Size::Small ? 2 : 3; }
    int max_part() const { return size == Size::Small ? 3 : 4; }
    int oracle_cap() const { return size == Size::Small ? 8 : 12; }
    std::uint64_t mc_samples() const { return size == Size::Small ? 100'000u : 1'000'000u; }
    int truncation_width() const { return size == Size::Small ? 12 : 20; }
    std::string size_str() const { return size == Size::Small ? "small" : "medium"; }
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckRecord> checks;
    bool passed = false;

    // Deterministic plain-text rendering; identical configs render
    // byte-identically.
    std::string format_text() const;
};

// Known suites: bijection, theorem-main, corollaries, identities, plancherel.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace dglpp
