// Acceptance gate: twelve go/no-go criteria, each printed as one PASS/FAIL
// line with its wall time and budget. Any failure (including a blown
// budget) makes the binary exit nonzero. Worker count comes from
// GPGRAPH_JOBS (default: hardware concurrency).

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "gpgraph/corpus.hpp"
#include "gpgraph/generators.hpp"
#include "gpgraph/parallel.hpp"
#include "gpgraph/sierpinski_gp.hpp"
#include "gpgraph/solver.hpp"
#include "gpgraph/verify.hpp"
#include "oracles.hpp"

using namespace gpgraph;

namespace {

using Clock = std::chrono::steady_clock;

int g_jobs = 1;

struct Criterion {
    bool pass = false;
    std::string detail;
};

// Runs one library claim and requires a clean, unskipped pass.
Criterion from_claims(const std::vector<std::string>& names) {
    VerifyOptions opt;
    opt.jobs = g_jobs;
    Criterion c;
    c.pass = true;
    for (const auto& name : names) {
        ClaimResult r = run_claim(name, opt);
        if (!r.passed()) {
            c.pass = false;
            c.detail += name + ": " + (r.skipped ? "skipped (" + r.note + ")"
                                                 : std::to_string(r.failure_count) + " failures");
            if (!r.failures.empty()) c.detail += " [" + r.failures.front() + "]";
            c.detail += "; ";
        } else {
            c.detail += name + " ok (" + std::to_string(r.instances) + " instances); ";
        }
    }
    if (!c.detail.empty()) c.detail.erase(c.detail.size() - 2);
    return c;
}

Criterion brute_force_agreement() {
    // Corpus: every connected graph up to isomorphism with n <= 7, plus a
    // seeded random batch reaching n = 8.
    std::vector<Graph> corpus;
    for (int n = 1; n <= 7; ++n)
        for (auto& g : connected_graphs_upto_iso(n)) corpus.push_back(std::move(g));
    for (auto& g : random_corpus(60, 8, 20260814)) corpus.push_back(std::move(g));

    std::atomic<std::int64_t> mismatches{0};
    std::atomic<std::int64_t> checked{0};
    parallel_for_index(g_jobs, static_cast<std::int64_t>(corpus.size()), [&](std::int64_t i) {
        const Graph& g = corpus[static_cast<std::size_t>(i)];
        if (max_gp(g).value != oracles::brute_gp(g).value) mismatches.fetch_add(1);
        checked.fetch_add(1);
        for (int u = 0; u < g.order(); ++u) {
            if (xi(g, u).value != oracles::brute_xi(g, u).value) mismatches.fetch_add(1);
            checked.fetch_add(1);
        }
    });
    Criterion c;
    c.pass = mismatches.load() == 0;
    c.detail = std::to_string(checked.load()) + " solves across " +
               std::to_string(corpus.size()) + " graphs, " + std::to_string(mismatches.load()) +
               " disagreements";
    return c;
}

}  // namespace

int main() {
    if (const char* env = std::getenv("GPGRAPH_JOBS")) {
        g_jobs = std::max(1, std::atoi(env));
    } else {
        unsigned hw = std::thread::hardware_concurrency();
        g_jobs = hw == 0 ? 1 : static_cast<int>(hw);
    }

    struct Entry {
        const char* name;
        double budget_s;
        Criterion (*fn)();
    };
    const std::vector<Entry> entries = {
        {"petersen gp=6, xi=5 everywhere", 1.0,
         [] { return from_claims({"petersen-values"}); }},
        {"100 random trees: gp and xi leaf formulas", 30.0,
         [] { return from_claims({"tree-proposition"}); }},
        {"cycle chains: xi- = 2, xi = 4 at u and v", 10.0,
         [] { return from_claims({"cycle-chain-values"}); }},
        {"bridged fixtures: gp 6/6, bounds 5/6", 5.0,
         [] { return from_claims({"fixture-bridge-bounds"}); }},
        {"chain inequality on 200 random graphs", 300.0,
         [] { return from_claims({"chain-inequality"}); }},
        {"verifier equivalence on all subsets, n <= 7", 300.0,
         [] { return from_claims({"verifier-equivalence"}); }},
        {"copy convexity and isometric cover bound", 300.0,
         [] { return from_claims({"product-convexity", "product-cover-bound"}); }},
        {"K2 factor: gps = 2xi and 2xi- for all H, n <= 6", 600.0,
         [] { return from_claims({"k2-max-formula", "k2-lower-formula"}); }},
        {"complete max formula, full vs symmetry", 300.0,
         [] { return from_claims({"complete-max-formula"}); }},
        {"complete lower formula on guarded pairs", 600.0,
         [] { return from_claims({"complete-lower-formula"}); }},
        {"K6 x K9 lower value 25, witness, non-injective >= 28", 1800.0,
         [] { return from_claims({"k6k9-lower"}); }},
        {"brute-force subset oracle agreement, n <= 8", 600.0, brute_force_agreement},
    };

    int failures = 0;
    std::printf("acceptance: %d workers\n", g_jobs);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto t0 = Clock::now();
        Criterion c = entries[i].fn();
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        bool in_budget = secs <= entries[i].budget_s;
        bool pass = c.pass && in_budget;
        if (!pass) ++failures;
        std::printf("[%s] %2zu. %s (%.2f s of %.0f s)%s%s\n", pass ? "PASS" : "FAIL", i + 1,
                    entries[i].name, secs, entries[i].budget_s,
                    c.detail.empty() ? "" : " -- ", c.detail.c_str());
        if (!in_budget) std::printf("       budget exceeded\n");
        std::fflush(stdout);
    }
    if (failures) {
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, entries.size());
        return 1;
    }
    std::printf("acceptance: all %zu criteria passed\n", entries.size());
    return 0;
}
