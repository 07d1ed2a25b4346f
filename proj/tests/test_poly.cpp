#include <doctest.h>

#include "util.hpp"

using namespace rrcc;
using rrcc::testutil::err_code;

namespace {

FPoly rand_fpoly(std::mt19937_64& rng, const FieldCtx& F, i64 max_deg) {
    FPoly f;
    const i64 d = rnd_below(rng, max_deg + 1);
    for (i64 i = 0; i <= d; ++i) f.push_back(ff_dec(F, rnd_below(rng, F.q)));
    return fp_normalize(F, f);
}

RPoly rand_rpoly(std::mt19937_64& rng, const FieldCtx& F, i64 max_deg) {
    RPoly f;
    const i64 d = rnd_below(rng, max_deg + 1);
    for (i64 i = 0; i <= d; ++i) f.push_back(testutil::rand_relem(rng, F));
    return rp_normalize(f);
}

} // namespace

TEST_CASE("division and modular inverse postconditions") {
    FieldCtx F = field_new(7, 1);
    std::mt19937_64 rng(21);
    for (int k = 0; k < 200; ++k) {
        FPoly a = rand_fpoly(rng, F, 9);
        FPoly b = rand_fpoly(rng, F, 3);
        if (fp_is_zero(b)) continue;
        b.back() = ff_one(F); // monic divisor
        auto [quot, rem] = fp_divmod(F, a, b);
        CHECK(fp_eq(F, a, fp_add(F, fp_mul(F, quot, b), rem)));
        CHECK(fp_deg(rem) < fp_deg(b));
    }

    // theta = x^3 - 2 is irreducible over F_7 (2 has no cube root), so every
    // nonzero residue is invertible
    FPoly theta = fp_theta(F, ff_dec(F, 2));
    for (int k = 0; k < 100; ++k) {
        FPoly g = rand_fpoly(rng, F, 2);
        if (fp_is_zero(g)) continue;
        FPoly inv = fp_inv_mod(F, g, theta);
        CHECK(fp_eq(F, fp_divmod(F, fp_mul(F, g, inv), theta).second, fp_one(F)));
    }
    CHECK(err_code([&] { fp_inv_mod(F, FPoly{ff_zero(F), ff_one(F)}, fp_monomial(F, 2, ff_one(F))); }) ==
          "NotAUnit");
}

TEST_CASE("theta digits round trip") {
    FieldCtx F = field_new(7, 1);
    FieldElem a0 = ff_dec(F, 2);
    std::mt19937_64 rng(22);
    for (int k = 0; k < 100; ++k) {
        FPoly h = rand_fpoly(rng, F, 41);
        auto digits = fp_theta_digits(F, a0, h, 14);
        CHECK(digits.size() >= 14);
        for (const auto& d : digits) CHECK(fp_deg(d) <= 2);
        CHECK(fp_eq(F, fp_theta_series(F, a0, digits, 0), h));
    }
}

TEST_CASE("reciprocal polynomials") {
    FieldCtx F = field_new(7, 1);
    auto rconst = [&](i64 c) { return r_from_field(F, ff_dec(F, c)); };

    // x^2 + 2x + 3 reverses to 3x^2 + 2x + 1
    RPoly f{rconst(3), rconst(2), rconst(1)};
    CHECK(rp_eq(rp_reciprocal(f), RPoly{rconst(1), rconst(2), rconst(3)}));

    // reversal is about the formal degree even when the lead is a zero divisor
    RPoly ux{r_zero(F), r_make(ff_zero(F), ff_one(F), ff_zero(F), ff_zero(F))};
    CHECK(rp_eq(rp_reciprocal(ux), RPoly{ux[1]}));

    CHECK(err_code([&] { rp_reciprocal(rp_zero()); }) == "ZeroPolynomial");

    std::mt19937_64 rng(23);
    for (int k = 0; k < 100; ++k) {
        RPoly g = rand_rpoly(rng, F, 8);
        if (rp_is_zero(g) || r_is_zero(g.front())) continue;
        CHECK(rp_eq(rp_reciprocal(rp_reciprocal(g)), g));
    }
}

TEST_CASE("reciprocal power identity") {
    // (x^3 - a0)^ell reverses to (-a0)^ell (x^3 - a0^-1)^ell
    FieldCtx F = field_new(7, 1);
    FieldElem a0 = ff_dec(F, 2);
    FieldElem a0i = ff_inv(F, a0);
    for (i64 ell = 0; ell <= 5; ++ell) {
        RPoly lhs = rp_reciprocal(rp_from_fpoly(F, fp_theta_pow(F, a0, ell)));
        FieldElem scale = ff_pow(F, ff_neg(F, a0), ell);
        RPoly rhs = rp_scale(F, r_from_field(F, scale),
                             rp_from_fpoly(F, fp_theta_pow(F, a0i, ell)));
        CHECK(rp_eq(lhs, rhs));
    }
}

TEST_CASE("split and join round trip") {
    FieldCtx F = field_new(7, 1);
    std::mt19937_64 rng(24);
    for (int k = 0; k < 100; ++k) {
        RPoly f = rand_rpoly(rng, F, 10);
        RPolySplit s = rp_split(F, f);
        CHECK(rp_eq(rp_join(F, s), f));
        for (const auto& h : {s.h1, s.h2, s.h3, s.h4}) CHECK(fp_deg(h) <= rp_deg(f));
    }
}

TEST_CASE("CRT factor lists") {
    FieldCtx F7 = field_new(7, 1);
    auto xp_minus = [&](const FieldCtx& F, i64 deg, i64 c) {
        return rp_sub(F, rp_monomial(F, deg, r_one(F)), rp_monomial(F, 0, r_from_field(F, ff_dec(F, c))));
    };
    auto fac7 = crt_factorization(F7, r_one(F7), 1);
    REQUIRE(fac7.size() == 3);
    CHECK(rp_eq(fac7[0], xp_minus(F7, 7, 1)));
    CHECK(rp_eq(fac7[1], xp_minus(F7, 7, 2)));
    CHECK(rp_eq(fac7[2], xp_minus(F7, 7, 4)));

    FieldCtx F2 = field_new(2, 1);
    auto fac2 = crt_factorization(F2, r_one(F2), 1);
    REQUIRE(fac2.size() == 2);
    CHECK(rp_eq(fac2[0], xp_minus(F2, 2, 1)));
    RPoly quartic = rp_add(F2, rp_monomial(F2, 4, r_one(F2)),
                           rp_add(F2, rp_monomial(F2, 2, r_one(F2)), rp_one(F2)));
    CHECK(rp_eq(fac2[1], quartic));

    CHECK(err_code([&] { crt_factorization(F7, r_from_field(F7, ff_dec(F7, 2)), 1); }) ==
          "NotCube");

    // the exact-product postcondition runs inside; random cubes must pass it
    std::mt19937_64 rng(25);
    for (const FieldCtx& F : {F7, F2, field_new(2, 2)}) {
        for (int k = 0; k < 10; ++k) {
            RElem unit = testutil::rand_relem(rng, F);
            if (!r_is_unit(unit)) continue;
            auto fac = crt_factorization(F, r_pow(F, unit, 3), 1 + k % 2);
            CHECK(fac.size() >= 2);
        }
    }
}
