#pragma once

#include <string>

#include "json.hpp"
#include "kanex/pipeline.hpp"

namespace kanex {

using Json = nlohmann::ordered_json;

// Document schema (bit-exact contract):
//   field: 0 or a prime p
//   shape: a builtin name ("A_tilde(4,2)", "K(4,2,5)", "A_n(3)", ...) or
//          { "objects": ["(0,0)", ...], "covers": [["(0,0)","(1,0)"], ...] }
//   complexes: { "<label>": { "range": [lo,hi], "dims": [...],
//                             "d": { "<degree>": [row-major entries] } } }
//   arrows: { "<src>-><tgt>": { "<degree>": [row-major entries] } }
// Entries are integers (mod p) or strings "a/b" for rationals.

Json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j, FieldSpec f);

Json diagram_to_json(const Diagram& x, const std::string& shape_name = "");
Diagram diagram_from_json(const Json& j);

Json quiver_to_json(const QuiverComplex& q);

Json homology_to_json(const std::map<int, int>& h);
Json membership_to_json(const MembershipReport& r);

std::string dump_deterministic(const Json& j);

}  // namespace kanex
