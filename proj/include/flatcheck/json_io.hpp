#pragma once

#include <json.hpp>

#include "flatcheck/decide.hpp"
#include "flatcheck/exterior.hpp"
#include "flatcheck/module.hpp"
#include "flatcheck/ring.hpp"
#include "flatcheck/seqring.hpp"
#include "flatcheck/spectrum.hpp"

namespace flatcheck {

using nlohmann::json;

inline constexpr const char* kSchemaTag = "flatcheck/1";

// Ring descriptor documents:
//   {"kind":"zmod","n":6}
//   {"kind":"poly_quotient","p":2,"f":[0,1,1]}   (little-endian, monic)
//   {"kind":"product","factors":[...]}
//   {"kind":"seq","base":{...}}
json ring_to_json(const Ring& R);
Ring ring_from_json(const json& j);

// Element encodings: zmod -> integer, poly_quotient -> integer array,
// product -> array, seq -> {"prefix":[...],"tail":...}.
json elem_to_json(const Ring& R, const Elem& e);
Elem elem_from_json(const Ring& R, const json& j);

json ideal_to_json(const Ideal& I);

// Module documents: {"ring":...,"generators":k,"relations":[[...],...]}.
json module_to_json(const PresentedModule& M);
PresentedModule module_from_json(const json& j);

json prime_site_to_json(const PrimeSite& site);
json rank_map_to_json(const RankMap& rm);
json flatness_to_json(const Ring& R, const FlatnessReport& fr);
json verdict_to_json(const ProjectivityVerdict& v);
json pointwise_to_json(const PointwiseLocalization& pl);
json certificate_to_json(const Example1Certificate& cert);

}  // namespace flatcheck
