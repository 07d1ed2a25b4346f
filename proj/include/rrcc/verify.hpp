#pragma once

#include "rrcc/json_io.hpp"

namespace rrcc {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<CheckResult> checks;

    void add(std::string name, bool ok, std::string detail = "") {
        pass = pass && ok;
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

struct VerifyOpts {
    i64 max_dim = 128;                // refuse larger ambients
    i64 samples = 60;                 // sampled Type C/D specs per suite
    i64 pairs = 500;                  // distinctness pair count
    i64 principal = 100;              // random principal ideals
    i64 dual_cap = 96;                // dual synthesis oracle-check threshold
    i64 z_digit_bound = 2;
    unsigned long long seed = 42;
};

// deterministic spec pool: A0, A1, every Type B, forced ell = p^s + t
// boundary shapes (odd NC_FULL, including degenerate z + 2 alpha2 = 0 mod
// theta^j patterns), then seeded random Type C/D specs until `samples` of
// them are collected
std::vector<CodeSpec> build_spec_pool(const QCtx& ctx, const VerifyOpts& opts);

// suite in {nilpotency, counts, duals, distinctness, principal-completeness,
// crt, nonchain}; "all" expands to every suite applicable to the ambient
std::vector<SuiteResult> run_suites(const QCtx& ctx, const std::string& suite,
                                    const VerifyOpts& opts);

bool suites_pass(const std::vector<SuiteResult>& rs);
Json suites_to_json(const std::vector<SuiteResult>& rs);

} // namespace rrcc
