#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rrcc/verify.hpp"

namespace {

using rrcc::fail;
using rrcc::i64;
using rrcc::Json;

// library error codes -> process exit codes: 1 broken internal invariant,
// 2 invalid input, 4 I/O; verification failures use 3 (no exception)
int exit_code_for(const std::string& code) {
    if (code == "InternalError" || code == "ProductMismatch" || code == "FormulaDiscrepancy")
        return 1;
    if (code == "IoFailure") return 4;
    return 2;
}

// arguments may be inline JSON or @path-to-file
std::string slurp_arg(const std::string& a) {
    if (a.empty() || a[0] != '@') return a;
    const std::string path = a.substr(1);
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) fail("IoFailure", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        fail("InvalidInput", std::string(what) + " is not valid JSON: " + e.what());
    }
}

void emit(const Json& payload) {
    Json envelope;
    envelope["schema"] = "1";
    envelope["status"] = "ok";
    envelope["payload"] = payload;
    std::cout << envelope.dump(2) << "\n";
}

struct Args {
    std::string ctx_json, field_json, alpha_json, spec_json, suite = "all", out_path;
    i64 s = 1;
    i64 max_dim = 128;
    i64 samples = 60;
    i64 dual_cap = 96;
    i64 z_bound = 1;
    i64 limit = 1000;
    unsigned long long seed = 42;
};

rrcc::QCtx load_ctx(const Args& a) {
    if (!a.ctx_json.empty()) return rrcc::ctx_from_json(parse_json(slurp_arg(a.ctx_json), "ctx"));
    rrcc::require(!a.field_json.empty() && !a.alpha_json.empty(), "InvalidInput",
                  "provide --ctx-json, or --field-json and --alpha-json");
    const rrcc::FieldCtx F = rrcc::field_from_json(parse_json(slurp_arg(a.field_json), "field"));
    const rrcc::RElem alpha = rrcc::relem_from_json(F, parse_json(slurp_arg(a.alpha_json), "alpha"));
    return rrcc::make_quotient_ctx(F, a.s, alpha);
}

rrcc::CodeSpec load_spec(const rrcc::QCtx& ctx, const Args& a) {
    rrcc::require(!a.spec_json.empty(), "InvalidInput", "--spec-json is required");
    return rrcc::spec_from_json(ctx->field, parse_json(slurp_arg(a.spec_json), "spec"));
}

int cmd_ring_info(const Args& a) {
    const rrcc::QCtx ctx = load_ctx(a);
    const rrcc::FieldCtx& F = ctx->field;
    Json j;
    j["ctx"] = rrcc::ctx_to_json(ctx);
    j["is_cube"] = rrcc::r_is_cube(F, ctx->alpha);
    j["theta_nilpotency"] = rrcc::predicted_theta_nilpotency(ctx);
    if (ctx->tag == rrcc::CaseTag::Cube) {
        j["maximal_ideal"] = nullptr;
        Json comps = Json::array();
        for (const auto& c : rrcc::crt_decompose(ctx)) comps.push_back(rrcc::crt_component_to_json(c));
        j["crt_components"] = comps;
    } else {
        Json gens = Json::array();
        gens.push_back(rrcc::rpoly_to_json(rrcc::rp_from_fpoly(F, ctx->theta)));
        gens.push_back(rrcc::rpoly_to_json({rrcc::r_make(rrcc::ff_zero(F), rrcc::ff_one(F),
                                                         rrcc::ff_zero(F), rrcc::ff_zero(F))}));
        if (ctx->tag == rrcc::CaseTag::NcUv || ctx->tag == rrcc::CaseTag::NcOther)
            gens.push_back(rrcc::rpoly_to_json({rrcc::r_make(rrcc::ff_zero(F), rrcc::ff_zero(F),
                                                             rrcc::ff_one(F), rrcc::ff_zero(F))}));
        j["maximal_ideal"] = gens;
        j["crt_components"] = nullptr;
    }
    if (ctx->tag == rrcc::CaseTag::NcOther) {
        const rrcc::QCtx mirror =
            rrcc::make_quotient_ctx(F, ctx->s, rrcc::r_swap_uv(ctx->alpha));
        j["mirror_case"] = rrcc::case_name(mirror->tag);
    } else {
        j["mirror_case"] = nullptr;
    }
    emit(j);
    return 0;
}

int cmd_classify(const Args& a, bool dual_only) {
    const rrcc::QCtx ctx = load_ctx(a);
    const rrcc::CodeDescriptor d = rrcc::describe(ctx, load_spec(ctx, a), a.dual_cap);
    emit(dual_only ? rrcc::dual_to_json(d.dual) : rrcc::descriptor_to_json(ctx, d));
    return 0;
}

int cmd_enumerate(const Args& a) {
    const rrcc::QCtx ctx = load_ctx(a);
    const auto specs = rrcc::enumerate_specs(ctx, {a.z_bound, a.limit});
    Json j;
    j["count"] = specs.size();
    Json arr = Json::array();
    for (const auto& sp : specs) arr.push_back(rrcc::spec_to_json(ctx->field, sp));
    j["specs"] = arr;
    emit(j);
    return 0;
}

int cmd_verify(const Args& a) {
    const rrcc::QCtx ctx = load_ctx(a);
    rrcc::VerifyOpts opts;
    opts.max_dim = a.max_dim;
    opts.samples = a.samples;
    opts.seed = a.seed;
    opts.dual_cap = a.dual_cap;
    const auto results = rrcc::run_suites(ctx, a.suite, opts);
    emit(rrcc::suites_to_json(results));
    return rrcc::suites_pass(results) ? 0 : 3;
}

int cmd_gen_matrix(const Args& a) {
    const rrcc::QCtx ctx = load_ctx(a);
    const rrcc::SubspaceBasis S =
        rrcc::span_closure(ctx, rrcc::generators(ctx, load_spec(ctx, a)));
    rrcc::require(!a.out_path.empty(), "InvalidInput", "--out is required");
    std::ofstream out(a.out_path, std::ios::binary);
    if (!out.good()) fail("IoFailure", "cannot open " + a.out_path);
    out << rrcc::export_matrix(S);
    out.flush();
    if (!out.good()) fail("IoFailure", "write to " + a.out_path + " failed");
    Json j;
    j["path"] = a.out_path;
    j["dim"] = rrcc::subspace_dim(S);
    emit(j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classifier for constacyclic codes of length 3p^s over "
                 "F_(p^m)[u,v]/(u^2, v^2, uv-vu)"};
    app.require_subcommand(1);

    Args a;
    app.add_option("--ctx-json", a.ctx_json, "context JSON {field, s, alpha} (or @file)");
    app.add_option("--field-json", a.field_json, "field JSON {p, m[, modulus]} (or @file)");
    app.add_option("--s", a.s, "exponent s of the length 3 p^s");
    app.add_option("--alpha-json", a.alpha_json, "constacyclic unit JSON (or @file)");
    app.add_option("--seed", a.seed, "seed for sampled verification suites");
    app.add_option("--max-dim", a.max_dim, "ambient F_p dimension cap for oracle work");
    app.add_option("--samples", a.samples, "sampled spec count for verification suites");
    app.add_option("--dual-cap", a.dual_cap, "oracle-check duals up to this ambient dimension");

    auto* ring = app.add_subcommand("ring-info", "ambient ring structure report");
    auto* classify = app.add_subcommand("classify", "full descriptor for one code spec");
    auto* dual = app.add_subcommand("dual", "dual generators for one code spec");
    auto* enumerate = app.add_subcommand("enumerate", "canonical spec stream");
    auto* verify = app.add_subcommand("verify", "oracle-vs-theorem verification suites");
    auto* genmat = app.add_subcommand("gen-matrix", "export an oracle basis matrix");

    for (auto* sub : {ring, classify, dual, enumerate, verify, genmat}) sub->fallthrough();
    for (auto* sub : {classify, dual, genmat})
        sub->add_option("--spec-json", a.spec_json, "code spec JSON (or @file)");
    enumerate->add_option("--z-bound", a.z_bound, "max z digit count");
    enumerate->add_option("--limit", a.limit, "max emitted specs");
    verify->add_option("--suite", a.suite,
                       "nilpotency|counts|duals|distinctness|principal-completeness|crt|"
                       "nonchain|all");
    genmat->add_option("--out", a.out_path, "output path for the basis matrix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (ring->parsed()) return cmd_ring_info(a);
        if (classify->parsed()) return cmd_classify(a, false);
        if (dual->parsed()) return cmd_classify(a, true);
        if (enumerate->parsed()) return cmd_enumerate(a);
        if (verify->parsed()) return cmd_verify(a);
        if (genmat->parsed()) return cmd_gen_matrix(a);
        fail("InvalidInput", "no subcommand");
    } catch (const rrcc::Error& e) {
        Json envelope;
        envelope["schema"] = "1";
        envelope["status"] = "error";
        envelope["error"] = Json{{"code", e.code()}, {"message", e.what()}};
        std::cout << envelope.dump(2) << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        Json envelope;
        envelope["schema"] = "1";
        envelope["status"] = "error";
        envelope["error"] = Json{{"code", "InternalError"}, {"message", e.what()}};
        std::cout << envelope.dump(2) << "\n";
        return 1;
    }
}
