#pragma once

#include <json.hpp>

#include "rrcc/codes.hpp"

namespace rrcc {

// key order is part of the output contract (byte-identical reruns), so the
// ordered variant is used everywhere
using Json = nlohmann::ordered_json;

// field elements travel as coefficient arrays (constant first); plain
// integers are accepted on input as encodings sum c_i p^i
Json felem_to_json(const FieldElem& a);
FieldElem felem_from_json(const FieldCtx& F, const Json& j);

// {"p":7,"m":1,"modulus":[0,1]}; modulus optional on input
Json field_to_json(const FieldCtx& F);
FieldCtx field_from_json(const Json& j);

// {"a1":…,"a2":…,"a3":…,"a4":…}; missing components are zero on input
Json relem_to_json(const RElem& a);
RElem relem_from_json(const FieldCtx& F, const Json& j);

// array of RElem, constant coefficient first
Json rpoly_to_json(const RPoly& f);
RPoly rpoly_from_json(const FieldCtx& F, const Json& j);

// input {"field":…,"s":…,"alpha":…}; output additionally carries the derived
// alpha0, case tag and length
Json ctx_to_json(const QCtx& ctx);
QCtx ctx_from_json(const Json& j);

// {"kind":"C","ell":5,"t":1,"z":[[0,0,1]],"mu":null}; z digits are
// (x^2, x, const) encoding triples; keys are always present, null when the
// kind does not use them
Json spec_to_json(const FieldCtx& F, const CodeSpec& spec);
CodeSpec spec_from_json(const FieldCtx& F, const Json& j);

Json dual_to_json(const DualSpec& d);
Json descriptor_to_json(const QCtx& ctx, const CodeDescriptor& d);

Json crt_component_to_json(const CrtComponent& c);

} // namespace rrcc
