#include "rrcc/json_io.hpp"

namespace rrcc {

namespace {

i64 get_int(const Json& j, const char* what) {
    require(j.is_number_integer(), "InvalidInput", std::string(what) + " must be an integer");
    return j.get<i64>();
}

const Json& get_key(const Json& j, const char* key) {
    require(j.is_object(), "InvalidInput", std::string("expected an object with key \"") + key + "\"");
    auto it = j.find(key);
    require(it != j.end(), "InvalidInput", std::string("missing key \"") + key + "\"");
    return *it;
}

} // namespace

Json felem_to_json(const FieldElem& a) {
    return Json(a);
}

FieldElem felem_from_json(const FieldCtx& F, const Json& j) {
    if (j.is_number_integer()) {
        const i64 v = j.get<i64>();
        require(0 <= v && v < F.q, "InvalidInput", "field element encoding out of range");
        return ff_dec(F, v);
    }
    require(j.is_array(), "InvalidInput", "field element must be an array or an encoding");
    require(static_cast<i64>(j.size()) == F.m, "InvalidInput",
            "field element needs exactly m coefficients");
    FieldElem a(F.m);
    for (i64 i = 0; i < F.m; ++i) {
        a[i] = get_int(j[i], "field coefficient");
        require(0 <= a[i] && a[i] < F.p, "InvalidInput", "field coefficient out of range");
    }
    return a;
}

Json field_to_json(const FieldCtx& F) {
    Json j;
    j["p"] = F.p;
    j["m"] = F.m;
    j["modulus"] = F.modulus;
    return j;
}

FieldCtx field_from_json(const Json& j) {
    const i64 p = get_int(get_key(j, "p"), "p");
    const i64 m = get_int(get_key(j, "m"), "m");
    std::optional<std::vector<i64>> modulus;
    if (j.contains("modulus") && !j["modulus"].is_null()) {
        const Json& mj = j["modulus"];
        require(mj.is_array(), "InvalidInput", "modulus must be an array");
        std::vector<i64> mod;
        for (const auto& c : mj) mod.push_back(get_int(c, "modulus coefficient"));
        modulus = std::move(mod);
    }
    return field_new(p, m, modulus);
}

Json relem_to_json(const RElem& a) {
    Json j;
    j["a1"] = felem_to_json(a.a1);
    j["a2"] = felem_to_json(a.a2);
    j["a3"] = felem_to_json(a.a3);
    j["a4"] = felem_to_json(a.a4);
    return j;
}

RElem relem_from_json(const FieldCtx& F, const Json& j) {
    require(j.is_object(), "InvalidInput", "ring element must be an object");
    auto comp = [&](const char* key) {
        if (!j.contains(key) || j[key].is_null()) return ff_zero(F);
        return felem_from_json(F, j[key]);
    };
    return r_make(comp("a1"), comp("a2"), comp("a3"), comp("a4"));
}

Json rpoly_to_json(const RPoly& f) {
    Json j = Json::array();
    for (const auto& c : f) j.push_back(relem_to_json(c));
    return j;
}

RPoly rpoly_from_json(const FieldCtx& F, const Json& j) {
    require(j.is_array(), "InvalidInput", "polynomial must be an array of ring elements");
    RPoly f;
    for (const auto& c : j) f.push_back(relem_from_json(F, c));
    return rp_normalize(std::move(f));
}

Json ctx_to_json(const QCtx& ctx) {
    Json j;
    j["field"] = field_to_json(ctx->field);
    j["s"] = ctx->s;
    j["alpha"] = relem_to_json(ctx->alpha);
    j["alpha0"] = felem_to_json(ctx->alpha0);
    j["case"] = case_name(ctx->tag);
    j["n"] = ctx->n;
    return j;
}

QCtx ctx_from_json(const Json& j) {
    const FieldCtx F = field_from_json(get_key(j, "field"));
    const i64 s = get_int(get_key(j, "s"), "s");
    const RElem alpha = relem_from_json(F, get_key(j, "alpha"));
    return make_quotient_ctx(F, s, alpha);
}

Json spec_to_json(const FieldCtx& F, const CodeSpec& spec) {
    Json j;
    j["kind"] = kind_name(spec.kind);
    const bool has_ell = spec.kind == Kind::B || spec.kind == Kind::C || spec.kind == Kind::D;
    const bool has_z = spec.kind == Kind::C || spec.kind == Kind::D;
    j["ell"] = has_ell ? Json(spec.ell) : Json(nullptr);
    j["t"] = has_z ? Json(spec.t) : Json(nullptr);
    if (has_z) {
        Json z = Json::array();
        for (const auto& d : spec.z) {
            auto coeff = [&](i64 i) {
                return i < static_cast<i64>(d.size()) ? ff_enc(F, d[i]) : 0;
            };
            z.push_back(Json::array({coeff(2), coeff(1), coeff(0)}));
        }
        j["z"] = z;
    } else {
        j["z"] = nullptr;
    }
    j["mu"] = spec.kind == Kind::D ? Json(spec.mu) : Json(nullptr);
    return j;
}

CodeSpec spec_from_json(const FieldCtx& F, const Json& j) {
    CodeSpec spec;
    const Json& kj = get_key(j, "kind");
    require(kj.is_string(), "InvalidInput", "kind must be a string");
    spec.kind = kind_from_name(kj.get<std::string>());
    auto opt_int = [&](const char* key) -> i64 {
        if (!j.contains(key) || j[key].is_null()) return 0;
        return get_int(j[key], key);
    };
    spec.ell = opt_int("ell");
    spec.t = opt_int("t");
    spec.mu = opt_int("mu");
    if (j.contains("z") && !j["z"].is_null()) {
        const Json& zj = j["z"];
        require(zj.is_array(), "InvalidInput", "z must be an array of digit triples");
        for (const auto& dj : zj) {
            require(dj.is_array() && dj.size() == 3, "InvalidInput",
                    "each z digit must be a (x^2, x, const) triple");
            FPoly d{felem_from_json(F, dj[2]), felem_from_json(F, dj[1]),
                    felem_from_json(F, dj[0])};
            spec.z.push_back(fp_normalize(F, d));
        }
    }
    return spec;
}

Json dual_to_json(const DualSpec& d) {
    Json j;
    j["ambient_alpha"] = relem_to_json(d.ambient->alpha);
    j["ambient_alpha0"] = felem_to_json(d.ambient->alpha0);
    Json gens = Json::array();
    for (const auto& g : d.generators) gens.push_back(rpoly_to_json(g.rep));
    j["generators"] = gens;
    j["branch"] = d.branch;
    j["flagged"] = d.flagged;
    j["oracle_checked"] = d.oracle_checked;
    return j;
}

Json descriptor_to_json(const QCtx& ctx, const CodeDescriptor& d) {
    Json j;
    j["spec"] = spec_to_json(ctx->field, d.spec);
    j["im"] = d.im;
    j["res_exp"] = d.res_exp;
    j["tor_exp"] = d.tor_exp;
    j["dim_fp"] = d.dim_fp;
    j["eta"] = d.eta;
    j["dual"] = dual_to_json(d.dual);
    return j;
}

Json crt_component_to_json(const CrtComponent& c) {
    Json j;
    j["modulus"] = rpoly_to_json(c.modulus);
    j["length"] = c.length;
    j["constacyclic"] = c.constacyclic;
    j["unit"] = c.constacyclic ? relem_to_json(c.unit) : Json(nullptr);
    return j;
}

} // namespace rrcc
