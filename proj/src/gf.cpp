#include "rrcc/gf.hpp"

#include <algorithm>

namespace rrcc {
namespace {

i64 mod_norm(i64 v, i64 p) {
    v %= p;
    return v < 0 ? v + p : v;
}

// dense F_p[x] helpers on constant-first coefficient vectors
using PPoly = std::vector<i64>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = mod_norm(c[i + j] + a[i] * b[j], p);
    }
    ptrim(c);
    return c;
}

// remainder of a by monic b
PPoly pmod(PPoly a, const PPoly& b, i64 p) {
    ptrim(a);
    const size_t db = b.size() - 1;
    while (a.size() > db) {
        i64 lead = a.back();
        size_t shift = a.size() - 1 - db;
        if (lead != 0)
            for (size_t j = 0; j <= db; ++j)
                a[shift + j] = mod_norm(a[shift + j] - lead * b[j], p);
        a.pop_back();
        ptrim(a);
    }
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& mod, i64 p) {
    return pmod(pmul(a, b, p), mod, p);
}

PPoly ppowmod(PPoly base, i64 e, const PPoly& mod, i64 p) {
    PPoly r = {1};
    base = pmod(std::move(base), mod, p);
    while (e > 0) {
        if (e & 1) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, i64 p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        i64 lead_inv = 0;
        for (i64 t = 1; t < p; ++t)
            if (mod_norm(t * b.back(), p) == 1) { lead_inv = t; break; }
        PPoly bm = b;
        for (auto& c : bm) c = mod_norm(c * lead_inv, p);
        PPoly r = pmod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// f monic of degree m over F_p: irreducible iff x^(p^m) = x mod f and
// gcd(x^(p^(m/r)) - x, f) = 1 for every prime r | m
bool poly_irreducible(const PPoly& f, i64 p, i64 m) {
    if (m == 1) return true;
    auto xq_pow = [&](i64 iters) {
        PPoly r = {0, 1};
        for (i64 i = 0; i < iters; ++i) r = ppowmod(r, p, f, p);
        return r;
    };
    PPoly top = xq_pow(m);
    PPoly x = pmod({0, 1}, f, p);
    if (top != x) return false;
    for (i64 r = 2; r <= m; ++r) {
        if (m % r != 0 || !is_prime(r)) continue;
        PPoly g = xq_pow(m / r);
        PPoly diff = g;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = mod_norm(diff[1] - 1, p);
        ptrim(diff);
        PPoly gc = pgcd(diff, f, p);
        if (!(gc.size() == 1)) return false;
    }
    return true;
}

PPoly default_modulus(i64 p, i64 m) {
    if (m == 1) return {0, 1}; // x
    // scan monic degree-m polynomials in constant-first lex order
    std::vector<i64> low(m, 0);
    while (true) {
        PPoly f = low;
        f.push_back(1);
        if (poly_irreducible(f, p, m)) return f;
        i64 i = m - 1;
        while (i >= 0) {
            if (++low[i] < p) break;
            low[i] = 0;
            --i;
        }
        if (i < 0) fail("InternalError", "no irreducible modulus found");
    }
}

FieldElem reduce_elem(const FieldCtx& F, PPoly a) {
    a = pmod(std::move(a), F.modulus, F.p);
    a.resize(F.m, 0);
    return a;
}

} // namespace

FieldCtx field_new(i64 p, i64 m, const std::optional<std::vector<i64>>& modulus) {
    require(is_prime(p), "NotPrime", "p = " + std::to_string(p));
    require(p != 3, "PEqualsThree", "p = 3 is excluded");
    require(m >= 1, "InvalidInput", "m must be >= 1");
    FieldCtx F;
    F.p = p;
    F.m = m;
    F.q = 1;
    for (i64 i = 0; i < m; ++i) {
        // several operations scan all q elements; keep the field desk-sized
        require(F.q <= (i64(1) << 20) / p, "InvalidInput", "field too large");
        F.q *= p;
    }
    if (modulus) {
        PPoly f = *modulus;
        for (auto& c : f) c = mod_norm(c, p);
        require(f.size() == size_t(m + 1) && f.back() == 1, "InvalidInput",
                "modulus must be monic of degree m, constant first");
        require(poly_irreducible(f, p, m), "ReducibleModulus",
                "supplied modulus factors over F_p");
        F.modulus = f;
    } else {
        F.modulus = default_modulus(p, m);
    }
    return F;
}

FieldElem ff_zero(const FieldCtx& F) { return FieldElem(F.m, 0); }

FieldElem ff_one(const FieldCtx& F) {
    FieldElem a(F.m, 0);
    a[0] = 1;
    return a;
}

FieldElem ff_from_int(const FieldCtx& F, i64 c) {
    FieldElem a(F.m, 0);
    a[0] = mod_norm(c, F.p);
    return a;
}

FieldElem ff_gen(const FieldCtx& F) {
    require(F.m >= 2, "InvalidInput", "prime field has no generator element");
    FieldElem a(F.m, 0);
    a[1] = 1;
    return a;
}

bool ff_is_zero(const FieldElem& a) {
    return std::all_of(a.begin(), a.end(), [](i64 c) { return c == 0; });
}

bool ff_eq(const FieldElem& a, const FieldElem& b) { return a == b; }

FieldElem ff_add(const FieldCtx& F, const FieldElem& a, const FieldElem& b) {
    FieldElem c(F.m);
    for (i64 i = 0; i < F.m; ++i) c[i] = mod_norm(a[i] + b[i], F.p);
    return c;
}

FieldElem ff_sub(const FieldCtx& F, const FieldElem& a, const FieldElem& b) {
    FieldElem c(F.m);
    for (i64 i = 0; i < F.m; ++i) c[i] = mod_norm(a[i] - b[i], F.p);
    return c;
}

FieldElem ff_neg(const FieldCtx& F, const FieldElem& a) {
    FieldElem c(F.m);
    for (i64 i = 0; i < F.m; ++i) c[i] = mod_norm(-a[i], F.p);
    return c;
}

FieldElem ff_mul(const FieldCtx& F, const FieldElem& a, const FieldElem& b) {
    return reduce_elem(F, pmul(a, b, F.p));
}

FieldElem ff_inv(const FieldCtx& F, const FieldElem& a) {
    require(!ff_is_zero(a), "DivisionByZero", "inverse of zero");
    // a^(q-2); q <= 2^40 keeps this cheap at desk scale
    return ff_pow(F, a, F.q - 2);
}

FieldElem ff_div(const FieldCtx& F, const FieldElem& a, const FieldElem& b) {
    return ff_mul(F, a, ff_inv(F, b));
}

FieldElem ff_pow(const FieldCtx& F, FieldElem a, i64 e) {
    require(e >= 0, "InvalidInput", "negative exponent");
    FieldElem r = ff_one(F);
    while (e > 0) {
        if (e & 1) r = ff_mul(F, r, a);
        a = ff_mul(F, a, a);
        e >>= 1;
    }
    return r;
}

i64 ff_enc(const FieldCtx& F, const FieldElem& a) {
    i64 code = 0, w = 1;
    for (i64 i = 0; i < F.m; ++i) {
        code += a[i] * w;
        w *= F.p;
    }
    return code;
}

FieldElem ff_dec(const FieldCtx& F, i64 code) {
    require(code >= 0 && code < F.q, "InvalidInput", "encoding out of range");
    FieldElem a(F.m);
    for (i64 i = 0; i < F.m; ++i) {
        a[i] = code % F.p;
        code /= F.p;
    }
    return a;
}

bool ff_is_cube(const FieldCtx& F, const FieldElem& a) {
    if (F.q % 3 == 2) return true; // cube map is a bijection
    if (ff_is_zero(a)) return true;
    return ff_eq(ff_pow(F, a, (F.q - 1) / 3), ff_one(F));
}

FieldElem ff_cube_root(const FieldCtx& F, const FieldElem& a) {
    require(ff_is_cube(F, a), "NotACube", "element is not a cube");
    if (ff_is_zero(a)) return ff_zero(F);
    if (F.q % 3 == 2) {
        // solve 3e = 1 (mod q-1), root is a^e
        i64 n = F.q - 1, e = 0;
        for (i64 t = 0; t < 3; ++t)
            if ((1 + t * n) % 3 == 0) { e = (1 + t * n) / 3; break; }
        return ff_pow(F, a, e);
    }
    for (i64 code = 0; code < F.q; ++code) {
        FieldElem x = ff_dec(F, code);
        if (ff_eq(ff_mul(F, x, ff_mul(F, x, x)), a)) return x;
    }
    fail("InternalError", "cube root scan exhausted");
}

FieldElem ff_alpha0(const FieldCtx& F, const FieldElem& a1, i64 s) {
    require(!ff_is_zero(a1), "ZeroInput", "alpha0 of zero");
    require(s >= 0, "InvalidInput", "s must be >= 0");
    i64 e = (F.m - (s % F.m)) % F.m;
    FieldElem a0 = a1;
    for (i64 i = 0; i < e; ++i) a0 = ff_pow(F, a0, F.p);
    // postcondition: alpha0^(p^s) = a1
    FieldElem check = a0;
    for (i64 i = 0; i < s % F.m; ++i) check = ff_pow(F, check, F.p);
    // frobenius has order m, so a^(p^s) = a^(p^(s mod m))
    require(ff_eq(check, a1), "InternalError", "alpha0 postcondition failed");
    return a0;
}

std::pair<FieldElem, FieldElem> ff_delta_gamma(const FieldCtx& F) {
    require(F.q % 3 == 1, "WrongResidueClass",
            "x^2+x+1 has no roots unless p^m = 1 (mod 3)");
    std::vector<FieldElem> roots;
    for (i64 code = 0; code < F.q && roots.size() < 2; ++code) {
        FieldElem x = ff_dec(F, code);
        FieldElem v = ff_add(F, ff_add(F, ff_mul(F, x, x), x), ff_one(F));
        if (ff_is_zero(v)) roots.push_back(x);
    }
    require(roots.size() == 2, "InternalError", "expected two roots of x^2+x+1");
    const FieldElem& d = roots[0];
    const FieldElem& g = roots[1];
    require(ff_eq(ff_mul(F, d, g), ff_one(F)), "InternalError", "delta*gamma != 1");
    return {d, g};
}

bool ff_is_irreducible_quadratic(const FieldCtx& F, const FieldElem& c) {
    require(!ff_is_zero(c), "ZeroInput", "c must be nonzero");
    FieldElem c2 = ff_mul(F, c, c);
    for (i64 code = 0; code < F.q; ++code) {
        FieldElem x = ff_dec(F, code);
        FieldElem v = ff_add(F, ff_add(F, ff_mul(F, x, x), ff_mul(F, c, x)), c2);
        if (ff_is_zero(v)) return false;
    }
    return true;
}

} // namespace rrcc
