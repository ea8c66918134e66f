#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpgraph/solver.hpp"

namespace gpgraph {

struct VerifyOptions {
    SolverConfig solver;
    int jobs = 1;
    std::uint64_t seed = 20260814;  // fixed default: reproducible corpora
    std::int64_t budget_ms = 0;     // whole-suite wall budget, 0 = unlimited
};

struct ClaimResult {
    std::string name;
    std::string detail;                  // what was checked, one line
    std::int64_t instances = 0;          // instances actually checked
    std::vector<std::string> failures;   // first few failing instances
    std::int64_t failure_count = 0;      // total, may exceed failures.size()
    bool skipped = false;
    std::string note;                    // skip reason or extra context
    double ms = 0.0;

    bool passed() const { return !skipped && failure_count == 0; }
};

struct VerifyReport {
    std::string suite;
    std::int64_t budget_ms = 0;
    double ms = 0.0;
    std::vector<ClaimResult> claims;

    // No claim failed (skipped claims do not fail the report).
    bool ok() const {
        for (const auto& c : claims)
            if (!c.skipped && c.failure_count > 0) return false;
        return true;
    }
    bool any_skipped() const {
        for (const auto& c : claims)
            if (c.skipped) return true;
        return false;
    }
};

// Claim names grouped into suites: "k2", "complete", "colinear", or "all".
std::vector<std::string> suite_claims(const std::string& suite);

// Runs one named claim with an unlimited (or opt.budget_ms) deadline.
ClaimResult run_claim(const std::string& name, const VerifyOptions& opt = {});

// Runs every claim of the suite under a shared wall-clock budget; claims
// that cannot finish in budget are reported skipped, never passed.
VerifyReport verify_theorems(const std::string& suite, const VerifyOptions& opt = {});

std::string render_text(const VerifyReport& report);

}  // namespace gpgraph
