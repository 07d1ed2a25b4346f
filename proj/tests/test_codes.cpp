#include <doctest.h>

#include <set>

#include "util.hpp"

using namespace rrcc;
using namespace rrcc::testutil;

namespace {

// oracle-side torsion: smallest e with u theta^e in S
i64 probe_torsion(const QCtx& ctx, const SubspaceBasis& S) {
    for (i64 e = 0; e < 2 * ctx->ps; ++e)
        if (member(q_u_times(ctx, fp_theta_pow(ctx->field, ctx->alpha0, e)), S)) return e;
    return 2 * ctx->ps;
}

SubspaceBasis span_of(const QCtx& ctx, const CodeSpec& sp) {
    return span_closure(ctx, generators(ctx, sp));
}

std::vector<RElem> word_of(const QCtx& ctx, const QElem& a) {
    std::vector<RElem> w(static_cast<size_t>(ctx->n), r_zero(ctx->field));
    for (size_t i = 0; i < a.rep.size(); ++i) w[i] = a.rep[i];
    return w;
}

} // namespace

TEST_CASE("spec validation") {
    QCtx v = ctx_ncv();
    const FieldCtx& F = v->field;

    CHECK(err_code([&] { validate_spec(v, mk(Kind::B, 14)); }) == "RangeViolation");
    CHECK(err_code([&] { validate_spec(v, mk(Kind::C, 0)); }) == "RangeViolation");
    CHECK(err_code([&] { validate_spec(v, mk(Kind::C, 5, 5, 0, {dig(F, 1)})); }) ==
          "RangeViolation");
    CHECK(err_code([&] { validate_spec(v, mk(Kind::D, 5, 1, 5)); }) == "MuNotBelowIm");
    CHECK(err_code([&] { validate_spec(v, mk(Kind::C, 5, 1, 0, {dig(F, 0), dig(F, 1)})); }) ==
          "ZNotInvertible");
    CHECK(err_code([&] { validate_spec(ctx_uv(), mk(Kind::B, 1)); }) == "UnsupportedCase");
    CHECK(err_code([&] { validate_spec(ctx_cube7(), mk(Kind::B, 1)); }) == "UnsupportedCase");

    CodeSpec c = validate_spec(v, mk(Kind::C, 5, 1, 0, {dig(F, 1)}));
    CHECK(c == mk(Kind::C, 5, 1, 0, {dig(F, 1)}));

    // trivial kinds normalize their unused fields away
    CHECK(validate_spec(v, mk(Kind::A0, 3, 2, 1)) == mk(Kind::A0));
    CHECK(validate_spec(v, mk(Kind::B, 3, 2, 1)) == mk(Kind::B, 3));

    // z is trimmed at the invariant window Im - t, then t resets if z dies
    ZSeries longz{dig(F, 1), dig(F, 0), dig(F, 0), dig(F, 0), dig(F, 0), dig(F, 2)};
    CodeSpec trimmed = validate_spec(v, mk(Kind::C, 5, 1, 0, longz));
    CHECK(trimmed.z == ZSeries{dig(F, 1)});
    CodeSpec dtrim = validate_spec(v, mk(Kind::D, 5, 1, 3, {dig(F, 1), dig(F, 0), dig(F, 2)}));
    CHECK(dtrim.z == ZSeries{dig(F, 1)});
}

TEST_CASE("torsion exponent formulas") {
    QCtx v = ctx_ncv();
    QCtx f = ctx_full_odd();
    const FieldCtx& F = v->field;

    CHECK(smallest_torsion_exponent(v, validate_spec(v, mk(Kind::C, 5))) == 5);
    CHECK(smallest_torsion_exponent(v, validate_spec(v, mk(Kind::C, 10, 1, 0, {dig(F, 1)}))) == 5);
    CHECK(smallest_torsion_exponent(f, validate_spec(f, mk(Kind::C, 8, 1, 0, {dig(F, 1)}))) == 7);
    CHECK(smallest_torsion_exponent(f, validate_spec(f, mk(Kind::C, 10)))== 7);

    // even characteristic keeps the two-term minimum
    QCtx e = ctx_full_even();
    CHECK(smallest_torsion_exponent(
              e, validate_spec(e, mk(Kind::C, 3, 1, 0, {dig(e->field, 1)}))) == 2);
}

TEST_CASE("torsion exponent at the ell = p^s + t boundary, oracle-measured") {
    QCtx f = ctx_full_odd(); // alpha2 = 1, so z + 2 alpha2 has constant digit z0 + 2
    const FieldCtx& F = f->field;

    struct Row {
        CodeSpec spec;
        i64 want;
    };
    // dig(F,5) = -2 alpha2 kills the constant digit of z + 2 alpha2, pushing
    // the valuation j above zero; Im = p^s + min(t, j), and Im = ell when the
    // whole series cancels
    std::vector<Row> rows{
        {mk(Kind::C, 8, 1, 0, {dig(F, 1)}), 7},                        // j = 0
        {mk(Kind::C, 8, 1, 0, {dig(F, 5)}), 8},                        // j = infinity
        {mk(Kind::C, 8, 1, 0, {dig(F, 5), dig(F, 1)}), 8},             // j = 1
        {mk(Kind::C, 8, 1, 0, {dig(F, 5), dig(F, 0), dig(F, 1)}), 8},  // j = 2, capped by t
        {mk(Kind::C, 9, 2, 0, {dig(F, 5), dig(F, 1)}), 8},             // j = 1 < t
        {mk(Kind::C, 9, 2, 0, {dig(F, 5), dig(F, 0), dig(F, 1)}), 9},  // j = 2 = t
    };
    for (const auto& row : rows) {
        CodeSpec sp = validate_spec(f, row.spec);
        const i64 im = smallest_torsion_exponent(f, sp);
        CHECK(im == row.want);
        CHECK(probe_torsion(f, span_of(f, sp)) == row.want);
    }
}

TEST_CASE("descriptor landmarks") {
    QCtx v = ctx_ncv();
    QCtx f = ctx_full_odd();
    const FieldCtx& F = v->field;

    CodeDescriptor b3 = describe(v, mk(Kind::B, 3), 0);
    CHECK(b3.res_exp == 14);
    CHECK(b3.tor_exp == 3);
    CHECK(b3.dim_fp == 33);

    CodeDescriptor c10 = describe(v, mk(Kind::C, 10, 1, 0, {dig(F, 1)}), 0);
    CHECK(c10.im == 5);
    CHECK(c10.res_exp == 10);
    CHECK(c10.tor_exp == 5);
    CHECK(c10.dim_fp == 39);

    CodeDescriptor d52 = describe(f, mk(Kind::D, 5, 0, 2), 0);
    CHECK(d52.res_exp == 5);
    CHECK(d52.tor_exp == 2);
    CHECK(d52.dim_fp == 63);

    CHECK(describe(v, mk(Kind::A0), 0).dim_fp == 0);
    CodeDescriptor a1 = describe(v, mk(Kind::A1), 0);
    CHECK(a1.dim_fp == 84);
    CHECK(a1.eta == pow_decimal(7, 84));

    CHECK(pow_decimal(7, 4) == "2401");
    CHECK(pow_decimal(2, 10) == "1024");
    CHECK(pow_decimal(10, 9) == "1000000000");
    CHECK(pow_decimal(7, 0) == "1");
}

TEST_CASE("generator shapes") {
    QCtx v = ctx_ncv();
    const FieldCtx& F = v->field;

    auto g0 = generators(v, mk(Kind::B, 0));
    REQUIRE(g0.size() == 1);
    CHECK(q_eq(g0[0], q_u_times(v, fp_one(F))));

    auto g1 = generators(v, mk(Kind::C, 1, 0, 0, {dig(F, 1)}));
    REQUIRE(g1.size() == 1);
    CHECK(q_eq(g1[0], q_add(q_theta_pow(v, 1), q_u_times(v, fp_one(F)))));

    auto g2 = generators(v, mk(Kind::D, 2, 0, 1));
    REQUIRE(g2.size() == 2);
    CHECK(q_eq(g2[0], q_theta_pow(v, 2)));
    CHECK(q_eq(g2[1], q_u_times(v, fp_theta_pow(F, v->alpha0, 1))));

    CHECK(q_is_zero(generators(v, mk(Kind::A0))[0]));
    CHECK(q_eq(generators(v, mk(Kind::A1))[0], q_one(v)));
}

TEST_CASE("dual branch table") {
    QCtx v = ctx_ncv();
    QCtx f = ctx_full_odd();
    const FieldCtx& F = v->field;

    struct Row {
        QCtx ctx;
        CodeSpec spec;
        std::string branch;
        bool flagged;
    };
    std::vector<Row> rows{
        {v, mk(Kind::A0), "A0", false},
        {v, mk(Kind::A1), "A1", false},
        {v, mk(Kind::B, 3), "B", false},
        {v, mk(Kind::C, 2), "C.z0", true},
        {v, mk(Kind::C, 5, 1, 0, {dig(F, 1)}), "C.chi1", false},
        {v, mk(Kind::C, 10, 1, 0, {dig(F, 1)}), "C.chi2", false},
        {v, mk(Kind::D, 5, 1, 3, {dig(F, 1)}), "D.phi", false},
        {f, mk(Kind::C, 5), "C.phi1", false},
        {f, mk(Kind::C, 10), "C.phi2", false},
        {f, mk(Kind::C, 5, 1, 0, {dig(F, 1)}), "C.phi3", false},
        {f, mk(Kind::C, 7, 1, 0, {dig(F, 1)}), "C.phi4", false},
        {f, mk(Kind::C, 10, 1, 0, {dig(F, 1)}), "C.phi5", false},
        {f, mk(Kind::C, 8, 1, 0, {dig(F, 1)}), "C.phi6", true},
        {f, mk(Kind::C, 8, 1, 0, {dig(F, 5), dig(F, 1)}), "C.phi6", true},
        {f, mk(Kind::D, 5, 1, 3, {dig(F, 1)}), "D.psi", false},
        {f, mk(Kind::D, 8, 1, 4, {dig(F, 1)}), "D.psi", true},
        {f, mk(Kind::D, 8, 1, 4, {dig(F, 5)}), "D.psi", true},
    };
    for (const auto& row : rows) {
        DualSpec d = dual_spec(row.ctx, row.spec, 96);
        CHECK(d.branch == row.branch);
        CHECK(d.flagged == row.flagged);
        CHECK(d.oracle_checked);
        SubspaceBasis primal = span_of(row.ctx, validate_spec(row.ctx, row.spec));
        SubspaceBasis dual = span_closure(d.ambient, d.generators);
        CHECK(subspace_dim(primal) + subspace_dim(dual) == 84);
    }

    // the Type B dual has the closed form <theta*^(2p^s - ell), u>
    DualSpec b3 = dual_spec(v, mk(Kind::B, 3), 96);
    SubspaceBasis expect = span_closure(
        b3.ambient, {q_theta_pow(b3.ambient, 11), q_u_times(b3.ambient, fp_one(F))});
    CHECK(subspace_equal(span_closure(b3.ambient, b3.generators), expect));

    // flagged z = 0 branch emits the dimension-correct principal dual
    DualSpec cz = dual_spec(v, mk(Kind::C, 2), 96);
    CHECK(subspace_equal(span_closure(cz.ambient, cz.generators),
                         span_closure(cz.ambient, {q_theta_pow(cz.ambient, 12)})));

    // above the check cap the synthesis is emitted unverified
    DualSpec un = dual_spec(v, mk(Kind::B, 3), 10);
    CHECK_FALSE(un.oracle_checked);
}

TEST_CASE("enumeration") {
    QCtx v = ctx_ncv();
    QCtx f = ctx_full_odd();
    QCtx e = ctx_full_even();
    const FieldCtx& F = v->field;

    auto first = enumerate_specs(v, EnumOpts{0, 1});
    REQUIRE(first.size() == 1);
    CHECK(first[0] == mk(Kind::A0));

    auto head = enumerate_specs(v, EnumOpts{1, 18});
    REQUIRE(head.size() == 18);
    CHECK(head[1] == mk(Kind::A1));
    CHECK(head[2] == mk(Kind::B, 0));
    CHECK(head[15] == mk(Kind::B, 13));
    CHECK(head[16] == mk(Kind::C, 1));
    CHECK(head[17] == mk(Kind::C, 1, 0, 0, {dig(F, 1)}));

    // z = 0 stream: 2 trivial + 14 B + 13 C + sum_ell ell D specs
    CHECK(enumerate_specs(v, EnumOpts{0, 10000}).size() == 120);
    // odd NC_FULL caps Im at p^s, shrinking the D range
    CHECK(enumerate_specs(f, EnumOpts{0, 10000}).size() == 99);
    CHECK(enumerate_specs(e, EnumOpts{0, 10000}).size() == 15);

    auto stream = enumerate_specs(v, EnumOpts{1, 400});
    std::set<std::string> labels;
    for (const auto& sp : stream) {
        CHECK(validate_spec(v, sp) == sp);
        if (sp.kind == Kind::D && sp.z.empty()) CHECK(sp.t == 0);
        CHECK(labels.insert(spec_to_json(F, sp).dump()).second);
    }

    CHECK(err_code([&] { enumerate_specs(ctx_uv(), EnumOpts{0, 10}); }) == "UnsupportedCase");
}

TEST_CASE("spec reconstruction round trip") {
    QCtx v = ctx_ncv();
    const FieldCtx& F = v->field;

    for (const auto& sp : enumerate_specs(v, EnumOpts{0, 10000}))
        CHECK(reconstruct_spec(span_of(v, sp)) == sp);

    std::vector<std::pair<QCtx, CodeSpec>> extra{
        {v, mk(Kind::C, 10, 1, 0, {dig(F, 1)})},
        {v, mk(Kind::C, 5, 1, 0, {dig(F, 2), dig(F, 0, 3)})},
        {v, mk(Kind::D, 5, 1, 3, {dig(F, 1)})},
        {ctx_full_odd(), mk(Kind::C, 8, 1, 0, {dig(F, 5), dig(F, 1)})},
        {ctx_full_odd(), mk(Kind::D, 8, 1, 4, {dig(F, 1)})},
        {ctx_full_even(), mk(Kind::C, 3, 1, 0, {dig(ctx_full_even()->field, 2)})},
    };
    for (const auto& [ctx, raw] : extra) {
        CodeSpec sp = validate_spec(ctx, raw);
        CHECK(reconstruct_spec(span_of(ctx, sp)) == sp);
    }
}

TEST_CASE("constacyclic shift") {
    QCtx cube = ctx_cube7();
    const FieldCtx& F = cube->field;
    std::vector<RElem> e0(21, r_zero(F));
    e0[0] = r_one(F);
    auto shifted = shift_word(cube, e0);
    CHECK(r_is_zero(shifted[0]));
    CHECK(shifted[1] == r_one(F));

    // alpha = 2 wraps the top coordinate scaled by alpha
    QCtx two = make_quotient_ctx(F, 1, r_from_field(F, ff_dec(F, 2)));
    std::vector<RElem> top(21, r_zero(F));
    top[20] = r_one(F);
    auto wrapped = shift_word(two, top);
    CHECK(wrapped[0] == r_from_field(F, ff_dec(F, 2)));
    for (int i = 1; i < 21; ++i) CHECK(r_is_zero(wrapped[i]));

    // n-fold shift multiplies the word by alpha
    QCtx v = ctx_ncv();
    std::mt19937_64 rng(51);
    auto word = word_of(v, rand_qelem(rng, v));
    auto roll = word;
    for (i64 i = 0; i < v->n; ++i) roll = shift_word(v, roll);
    for (i64 i = 0; i < v->n; ++i)
        CHECK(roll[static_cast<size_t>(i)] ==
              r_mul(F, v->alpha, word[static_cast<size_t>(i)]));

    // ideals are exactly the shift-closed subspaces; spot-check one ideal
    SubspaceBasis S = span_of(v, validate_spec(v, mk(Kind::C, 1, 0, 0, {dig(F, 1)})));
    for (const auto& row : S.mat.rows) {
        QElem a = q_unflatten(v, row);
        CHECK(member(q_make(v, shift_word(v, word_of(v, a))), S));
    }

    CHECK(err_code([&] { shift_word(v, std::vector<RElem>(5, r_zero(F))); }) ==
          "LengthMismatch");
}

TEST_CASE("CRT decomposition") {
    QCtx cube = ctx_cube7();
    auto comps = crt_decompose(cube);
    REQUIRE(comps.size() == 3);
    i64 expected_units[3] = {1, 2, 4};
    for (int i = 0; i < 3; ++i) {
        CHECK(comps[i].length == 7);
        CHECK(comps[i].constacyclic);
        CHECK(comps[i].unit == r_from_field(cube->field, ff_dec(cube->field, expected_units[i])));
    }

    QCtx cube2 = ctx_cube2();
    auto comps2 = crt_decompose(cube2);
    REQUIRE(comps2.size() == 2);
    CHECK(comps2[0].length == 2);
    CHECK(comps2[0].constacyclic);
    CHECK(comps2[0].unit == r_one(cube2->field));
    CHECK(comps2[1].length == 4);
    CHECK_FALSE(comps2[1].constacyclic);

    CHECK(err_code([&] { crt_decompose(ctx_ncv()); }) == "NotCube");
}

TEST_CASE("nilpotency prediction") {
    CHECK(predicted_theta_nilpotency(ctx_ncv()) == 14);
    CHECK(predicted_theta_nilpotency(ctx_full_odd()) == 21);
    CHECK(predicted_theta_nilpotency(ctx_full_even()) == 4);
    CHECK(predicted_theta_nilpotency(ctx_uv()) == 14);
    CHECK(predicted_theta_nilpotency(ctx_cube7()) == 7);
    CHECK(predicted_theta_nilpotency(ctx_cube2()) == 2);
}
