// Acceptance gate: prints one line per criterion and exits nonzero on any
// failure. argv[1] is the CLI binary, used by the determinism criterion.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rrcc/verify.hpp"

using namespace rrcc;

namespace {

QCtx mkctx(i64 p, i64 m, i64 s, i64 a1, i64 a2, i64 a3, i64 a4) {
    FieldCtx F = field_new(p, m);
    return make_quotient_ctx(
        F, s, r_make(ff_dec(F, a1), ff_dec(F, a2), ff_dec(F, a3), ff_dec(F, a4)));
}

struct Tally {
    i64 checks = 0;
    i64 failed = 0;
    std::string first;

    void fold(const std::vector<SuiteResult>& rs, const std::string& prefix) {
        for (const auto& s : rs)
            for (const auto& c : s.checks) {
                if (c.name.rfind(prefix, 0) != 0) continue;
                ++checks;
                if (!c.pass) {
                    ++failed;
                    if (first.empty()) first = c.name + " :: " + c.detail;
                }
            }
    }

    std::string say(const std::string& what) const {
        if (failed == 0) return std::to_string(checks) + " " + what;
        return std::to_string(failed) + "/" + std::to_string(checks) + " " + what +
               " failed; first: " + first;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    bool all = true;
    auto report = [&](int k, bool ok, const std::string& detail) {
        std::printf("criterion %2d: %s  %s\n", k, ok ? "PASS" : "FAIL", detail.c_str());
        std::fflush(stdout);
        all = all && ok;
    };

    QCtx v = mkctx(7, 1, 1, 2, 0, 3, 5);  // NC_V
    QCtx fo = mkctx(7, 1, 1, 2, 1, 3, 5); // NC_FULL, odd characteristic
    QCtx fe = mkctx(2, 2, 1, 2, 1, 1, 0); // NC_FULL, even characteristic
    QCtx uv = mkctx(7, 1, 1, 2, 0, 0, 5); // NC_UV
    QCtx c7 = mkctx(7, 1, 1, 1, 0, 0, 0); // CUBE
    QCtx c2 = mkctx(2, 1, 1, 1, 0, 0, 0); // CUBE, two-factor split

    try {
        // 1: measured nilpotency of theta across the four lemma contexts
        {
            const std::pair<QCtx, i64> rows[] = {{v, 14}, {fo, 21}, {fe, 4}, {uv, 14}};
            bool ok = true;
            std::string got;
            for (const auto& [ctx, want] : rows) {
                const i64 idx = nilpotency_index(q_from_fpoly(ctx, ctx->theta));
                ok = ok && idx == want;
                got += (got.empty() ? "" : "/") + std::to_string(idx);
            }
            report(1, ok, "measured " + got + ", expected 14/21/4/14");
        }

        VerifyOpts oV;
        oV.samples = 200;
        oV.z_digit_bound = 2;
        VerifyOpts oF = oV;
        oF.samples = 100;
        VerifyOpts oE = oV;
        oE.samples = 50;

        // 2: count theorems against the oracle over the three pools
        auto cntV = run_suites(v, "counts", oV);
        auto cntF = run_suites(fo, "counts", oF);
        auto cntE = run_suites(fe, "counts", oE);
        {
            auto kinds = [](const std::vector<CodeSpec>& pool, i64 N) {
                i64 b = 0, cd = 0;
                std::vector<bool> seen(static_cast<size_t>(N), false);
                bool boundary = false;
                for (const auto& sp : pool) {
                    if (sp.kind == Kind::B) {
                        ++b;
                        seen[static_cast<size_t>(sp.ell)] = true;
                    }
                    if (sp.kind == Kind::C || sp.kind == Kind::D) ++cd;
                }
                bool all_b = b == N;
                for (bool s : seen) all_b = all_b && s;
                (void)boundary;
                return std::pair<bool, i64>{all_b, cd};
            };
            auto [allBV, cdV] = kinds(build_spec_pool(v, oV), 14);
            auto [allBF, cdF] = kinds(build_spec_pool(fo, oF), 14);
            auto [allBE, cdE] = kinds(build_spec_pool(fe, oE), 4);
            bool boundaryE = false;
            for (const auto& sp : build_spec_pool(fe, oE))
                boundaryE = boundaryE ||
                            ((sp.kind == Kind::C || sp.kind == Kind::D) && !sp.z.empty() &&
                             sp.ell == fe->ps + sp.t);
            Tally t;
            t.fold(cntV, "count ");
            t.fold(cntF, "count ");
            t.fold(cntE, "count ");
            const bool comp = allBV && allBF && allBE && cdV >= 200 && cdF >= 100 &&
                              cdE >= 50 && boundaryE;
            report(2, t.failed == 0 && comp,
                   t.say("oracle dimension checks") + "; pools " + std::to_string(cdV) + "/" +
                       std::to_string(cdF) + "/" + std::to_string(cdE) + " C+D specs" +
                       (comp ? "" : "; pool composition short"));
        }

        // 3: synthesized dual = inner dual = reciprocal annihilator, sizes multiply
        auto dlV = run_suites(v, "duals", oV);
        auto dlF = run_suites(fo, "duals", oF);
        auto dlE = run_suites(fe, "duals", oE);
        {
            Tally t;
            t.fold(dlV, "dual equality ");
            t.fold(dlF, "dual equality ");
            t.fold(dlE, "dual equality ");
            report(3, t.failed == 0, t.say("dual equality checks, no formula discrepancies"));
        }

        // 4: annihilator torsion exponent 2p^s - ell
        {
            Tally t;
            t.fold(dlV, "dual torsion ");
            t.fold(dlF, "dual torsion ");
            t.fold(dlE, "dual torsion ");
            report(4, t.failed == 0 && t.checks >= 50, t.say("torsion probes"));
        }

        // 5: distinct specs generate distinct subspaces
        {
            auto rs = run_suites(v, "distinctness", oV);
            Tally t;
            t.fold(rs, "");
            report(5, suites_pass(rs),
                   std::to_string(oV.pairs) + " pairs over a " +
                       std::to_string(build_spec_pool(v, oV).size()) + "-spec pool" +
                       (suites_pass(rs) ? "" : "; " + t.first));
        }

        // 6: every random principal ideal matches an enumerable spec
        {
            auto rs = run_suites(v, "principal-completeness", oV);
            Tally t;
            t.fold(rs, "principal ");
            report(6, suites_pass(rs) && t.checks >= 100, t.say("random principal ideals"));
        }

        // 7: CRT factor products in both residue regimes
        {
            auto r7 = run_suites(c7, "crt", oV);
            auto r2 = run_suites(c2, "crt", oV);
            Tally t;
            t.fold(r7, "");
            t.fold(r2, "");
            report(7, suites_pass(r7) && suites_pass(r2), t.say("cube-case checks"));
        }

        // 8: non-chain membership witnesses
        {
            bool ok = true;
            Tally t;
            for (const QCtx& ctx : {v, fo, fe, uv}) {
                auto rs = run_suites(ctx, "nonchain", oV);
                ok = ok && suites_pass(rs);
                t.fold(rs, "");
            }
            report(8, ok, t.say("membership witnesses"));
        }

        // 9: shift closure of every criterion-2 code and of its dual
        {
            Tally t;
            for (const auto* rs : {&cntV, &cntF, &cntE}) t.fold(*rs, "shift ");
            for (const auto* rs : {&dlV, &dlF, &dlE}) t.fold(*rs, "dual shift ");
            report(9, t.failed == 0, t.say("shift-closure checks"));
        }

        // 10: byte-identical reruns of the full CLI verification
        {
            if (cli.empty()) {
                report(10, false, "no CLI path supplied");
            } else {
                const std::string cmd =
                    "\"" + cli +
                    "\" verify --field-json '{\"p\":7,\"m\":1}' --s 1"
                    " --alpha-json '{\"a1\":[2],\"a3\":[3],\"a4\":[5]}'"
                    " --suite all --seed 42";
                const int rc1 = std::system((cmd + " > acceptance_run1.json").c_str());
                const int rc2 = std::system((cmd + " > acceptance_run2.json").c_str());
                const std::string out1 = slurp("acceptance_run1.json");
                const std::string out2 = slurp("acceptance_run2.json");
                const bool ok = rc1 == 0 && rc2 == 0 && !out1.empty() && out1 == out2;
                report(10, ok,
                       ok ? std::to_string(out1.size()) + " identical bytes"
                          : "exit " + std::to_string(rc1) + "/" + std::to_string(rc2) +
                                ", sizes " + std::to_string(out1.size()) + "/" +
                                std::to_string(out2.size()));
            }
        }
    } catch (const std::exception& e) {
        std::printf("acceptance aborted: %s\n", e.what());
        return 1;
    }

    return all ? 0 : 1;
}
