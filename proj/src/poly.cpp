#include "rrcc/poly.hpp"

namespace rrcc {

FPoly fp_normalize(const FieldCtx&, FPoly a) {
    while (!a.empty() && ff_is_zero(a.back())) a.pop_back();
    return a;
}

FPoly fp_zero() { return {}; }

FPoly fp_one(const FieldCtx& F) { return {ff_one(F)}; }

FPoly fp_monomial(const FieldCtx& F, i64 deg, const FieldElem& c) {
    if (ff_is_zero(c)) return {};
    FPoly a(deg + 1, ff_zero(F));
    a[deg] = c;
    return a;
}

FPoly fp_x_minus(const FieldCtx& F, const FieldElem& r) {
    return {ff_neg(F, r), ff_one(F)};
}

i64 fp_deg(const FPoly& a) { return static_cast<i64>(a.size()) - 1; }

bool fp_is_zero(const FPoly& a) {
    for (const auto& c : a)
        if (!ff_is_zero(c)) return false;
    return true;
}

bool fp_eq(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    return fp_normalize(F, a) == fp_normalize(F, b);
}

FPoly fp_add(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    FPoly c(std::max(a.size(), b.size()), ff_zero(F));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = ff_add(F, c[i], b[i]);
    return fp_normalize(F, std::move(c));
}

FPoly fp_sub(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    return fp_add(F, a, fp_neg(F, b));
}

FPoly fp_neg(const FieldCtx& F, const FPoly& a) {
    FPoly c = a;
    for (auto& x : c) x = ff_neg(F, x);
    return c;
}

FPoly fp_mul(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    if (a.empty() || b.empty()) return {};
    FPoly c(a.size() + b.size() - 1, ff_zero(F));
    for (size_t i = 0; i < a.size(); ++i) {
        if (ff_is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = ff_add(F, c[i + j], ff_mul(F, a[i], b[j]));
    }
    return fp_normalize(F, std::move(c));
}

FPoly fp_scale(const FieldCtx& F, const FieldElem& c, const FPoly& a) {
    FPoly r = a;
    for (auto& x : r) x = ff_mul(F, c, x);
    return fp_normalize(F, std::move(r));
}

FPoly fp_shift(const FPoly& a, i64 k) {
    if (a.empty()) return {};
    FPoly r(a.size() + k);
    for (i64 i = 0; i < k; ++i) r[i] = FieldElem(a[0].size(), 0);
    std::copy(a.begin(), a.end(), r.begin() + k);
    return r;
}

std::pair<FPoly, FPoly> fp_divmod(const FieldCtx& F, FPoly a, const FPoly& b) {
    FPoly bb = fp_normalize(F, b);
    require(!bb.empty(), "DivisionByZero", "polynomial division by zero");
    require(ff_eq(bb.back(), ff_one(F)), "InvalidInput", "divisor must be monic");
    a = fp_normalize(F, std::move(a));
    i64 db = fp_deg(bb);
    FPoly q;
    if (fp_deg(a) >= db) q.assign(fp_deg(a) - db + 1, ff_zero(F));
    while (fp_deg(a) >= db) {
        i64 shift = fp_deg(a) - db;
        FieldElem lead = a.back();
        q[shift] = lead;
        for (i64 j = 0; j <= db; ++j)
            a[shift + j] = ff_sub(F, a[shift + j], ff_mul(F, lead, bb[j]));
        a = fp_normalize(F, std::move(a));
    }
    return {fp_normalize(F, std::move(q)), a};
}

FPoly fp_pow(const FieldCtx& F, const FPoly& a, i64 e) {
    require(e >= 0, "InvalidInput", "negative exponent");
    FPoly r = fp_one(F), base = a;
    while (e > 0) {
        if (e & 1) r = fp_mul(F, r, base);
        base = fp_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

FPoly fp_inv_mod(const FieldCtx& F, const FPoly& a, const FPoly& modulus) {
    // extended euclid; r0 = modulus stays monic-reducible via scaling
    FPoly r0 = fp_normalize(F, modulus), r1 = fp_divmod(F, a, modulus).second;
    FPoly t0 = fp_zero(), t1 = fp_one(F);
    while (!fp_is_zero(r1)) {
        FieldElem lead_inv = ff_inv(F, r1.back());
        FPoly r1m = fp_scale(F, lead_inv, r1);
        auto [q, rem] = fp_divmod(F, r0, r1m);
        q = fp_scale(F, lead_inv, q);
        FPoly t2 = fp_sub(F, t0, fp_mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    require(fp_deg(r0) == 0, "NotAUnit", "element not invertible modulo modulus");
    FPoly inv = fp_scale(F, ff_inv(F, r0[0]), t0);
    return fp_divmod(F, inv, modulus).second;
}

RPoly rp_normalize(RPoly a) {
    while (!a.empty() && r_is_zero(a.back())) a.pop_back();
    return a;
}

RPoly rp_zero() { return {}; }

RPoly rp_one(const FieldCtx& F) { return {r_one(F)}; }

RPoly rp_from_fpoly(const FieldCtx& F, const FPoly& a) {
    RPoly r(a.size(), r_zero(F));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r_from_field(F, a[i]);
    return rp_normalize(std::move(r));
}

RPoly rp_monomial(const FieldCtx& F, i64 deg, const RElem& c) {
    if (r_is_zero(c)) return {};
    RPoly a(deg + 1, r_zero(F));
    a[deg] = c;
    return a;
}

i64 rp_deg(const RPoly& a) { return static_cast<i64>(a.size()) - 1; }

bool rp_is_zero(const RPoly& a) {
    for (const auto& c : a)
        if (!r_is_zero(c)) return false;
    return true;
}

bool rp_eq(const RPoly& a, const RPoly& b) {
    return rp_normalize(a) == rp_normalize(b);
}

RPoly rp_add(const FieldCtx& F, const RPoly& a, const RPoly& b) {
    RPoly c(std::max(a.size(), b.size()), r_zero(F));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = r_add(F, c[i], b[i]);
    return rp_normalize(std::move(c));
}

RPoly rp_sub(const FieldCtx& F, const RPoly& a, const RPoly& b) {
    return rp_add(F, a, rp_neg(F, b));
}

RPoly rp_neg(const FieldCtx& F, const RPoly& a) {
    RPoly c = a;
    for (auto& x : c) x = r_neg(F, x);
    return c;
}

RPoly rp_mul(const FieldCtx& F, const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly c(a.size() + b.size() - 1, r_zero(F));
    for (size_t i = 0; i < a.size(); ++i) {
        if (r_is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = r_add(F, c[i + j], r_mul(F, a[i], b[j]));
    }
    return rp_normalize(std::move(c));
}

RPoly rp_scale(const FieldCtx& F, const RElem& c, const RPoly& a) {
    RPoly r = a;
    for (auto& x : r) x = r_mul(F, c, x);
    return rp_normalize(std::move(r));
}

RPoly rp_shift(const RPoly& a, i64 k) {
    if (a.empty()) return {};
    RPoly r(a.size() + k, {FieldElem(a[0].a1.size(), 0), FieldElem(a[0].a1.size(), 0),
                           FieldElem(a[0].a1.size(), 0), FieldElem(a[0].a1.size(), 0)});
    std::copy(a.begin(), a.end(), r.begin() + k);
    return r;
}

RPoly rp_pow(const FieldCtx& F, const RPoly& a, i64 e) {
    require(e >= 0, "InvalidInput", "negative exponent");
    RPoly r = rp_one(F), base = a;
    while (e > 0) {
        if (e & 1) r = rp_mul(F, r, base);
        base = rp_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

RPoly rp_swap_uv(const RPoly& a) {
    RPoly r = a;
    for (auto& c : r) c = r_swap_uv(c);
    return r;
}

RPolySplit rp_split(const FieldCtx& F, const RPoly& f) {
    RPolySplit s;
    s.h1.resize(f.size(), ff_zero(F));
    s.h2.resize(f.size(), ff_zero(F));
    s.h3.resize(f.size(), ff_zero(F));
    s.h4.resize(f.size(), ff_zero(F));
    for (size_t i = 0; i < f.size(); ++i) {
        s.h1[i] = f[i].a1;
        s.h2[i] = f[i].a2;
        s.h3[i] = f[i].a3;
        s.h4[i] = f[i].a4;
    }
    s.h1 = fp_normalize(F, std::move(s.h1));
    s.h2 = fp_normalize(F, std::move(s.h2));
    s.h3 = fp_normalize(F, std::move(s.h3));
    s.h4 = fp_normalize(F, std::move(s.h4));
    return s;
}

RPoly rp_join(const FieldCtx& F, const RPolySplit& s) {
    size_t n = std::max(std::max(s.h1.size(), s.h2.size()),
                        std::max(s.h3.size(), s.h4.size()));
    RPoly f(n, r_zero(F));
    for (size_t i = 0; i < n; ++i) {
        if (i < s.h1.size()) f[i].a1 = s.h1[i];
        if (i < s.h2.size()) f[i].a2 = s.h2[i];
        if (i < s.h3.size()) f[i].a3 = s.h3[i];
        if (i < s.h4.size()) f[i].a4 = s.h4[i];
    }
    return rp_normalize(std::move(f));
}

RPoly rp_reciprocal(const RPoly& a) {
    RPoly f = rp_normalize(a);
    require(!f.empty(), "ZeroPolynomial", "reciprocal of the zero polynomial");
    RPoly r(f.rbegin(), f.rend());
    return rp_normalize(std::move(r));
}

FPoly fp_theta(const FieldCtx& F, const FieldElem& a0) {
    FPoly t(4, ff_zero(F));
    t[0] = ff_neg(F, a0);
    t[3] = ff_one(F);
    return t;
}

FPoly fp_theta_pow(const FieldCtx& F, const FieldElem& a0, i64 k) {
    return fp_pow(F, fp_theta(F, a0), k);
}

std::vector<FPoly> fp_theta_digits(const FieldCtx& F, const FieldElem& a0,
                                   FPoly h, i64 min_count) {
    FPoly theta = fp_theta(F, a0);
    h = fp_normalize(F, std::move(h));
    std::vector<FPoly> digits;
    while (!h.empty()) {
        auto [q, r] = fp_divmod(F, std::move(h), theta);
        digits.push_back(std::move(r));
        h = std::move(q);
    }
    while (static_cast<i64>(digits.size()) < min_count) digits.push_back(fp_zero());
    return digits;
}

FPoly fp_theta_series(const FieldCtx& F, const FieldElem& a0,
                      const std::vector<FPoly>& digits, i64 shift) {
    FPoly acc = fp_zero();
    for (size_t k = 0; k < digits.size(); ++k) {
        if (fp_is_zero(digits[k])) continue;
        acc = fp_add(F, acc,
                     fp_mul(F, digits[k], fp_theta_pow(F, a0, shift + static_cast<i64>(k))));
    }
    return acc;
}

std::vector<RPoly> crt_factorization(const FieldCtx& F, const RElem& alpha, i64 s) {
    require(s >= 0, "InvalidInput", "s must be >= 0");
    require(r_is_unit(alpha), "NotAUnit", "alpha must be a unit");
    require(r_is_cube(F, alpha), "NotCube", "alpha must be a cube unit of R");
    i64 P = 1;
    for (i64 i = 0; i < s; ++i) {
        require(P <= (i64(1) << 20) / F.p, "InvalidInput", "p^s too large");
        P *= F.p;
    }
    RElem b = r_cube_witness(F, alpha);
    std::vector<RPoly> factors;
    if (F.q % 3 == 1) {
        auto [d, g] = ff_delta_gamma(F);
        for (const RElem& root : {b, r_scale(F, d, b), r_scale(F, g, b)}) {
            RPoly f = rp_monomial(F, P, r_one(F));
            f = rp_add(F, f, rp_monomial(F, 0, r_neg(F, root)));
            factors.push_back(std::move(f));
        }
    } else {
        RPoly lin = rp_add(F, rp_monomial(F, P, r_one(F)), rp_monomial(F, 0, r_neg(F, b)));
        RPoly quad = rp_monomial(F, 2 * P, r_one(F));
        quad = rp_add(F, quad, rp_monomial(F, P, b));
        quad = rp_add(F, quad, rp_monomial(F, 0, r_mul(F, b, b)));
        factors.push_back(std::move(lin));
        factors.push_back(std::move(quad));
    }
    RPoly prod = rp_one(F);
    for (const auto& f : factors) prod = rp_mul(F, prod, f);
    RPoly target = rp_add(F, rp_monomial(F, 3 * P, r_one(F)),
                          rp_monomial(F, 0, r_neg(F, alpha)));
    require(rp_eq(prod, target), "ProductMismatch",
            "CRT factor product differs from x^(3 p^s) - alpha");
    return factors;
}

} // namespace rrcc
