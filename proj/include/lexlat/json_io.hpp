#pragma once

#include <memory>
#include <string>

#include "json.hpp"
#include "lexlat/lex_element.hpp"
#include "lexlat/poset.hpp"
#include "lexlat/root_function.hpp"

namespace lexlat {

// nlohmann::json keeps object keys sorted, which is exactly the canonical
// form the readers and golden files expect.
using Json = nlohmann::json;

// {"poset": "<spec>", "coeffs": {"a": "3/2", "b": "-5"}}
Json element_to_json(const LexElement& f, const std::string& poset_spec);
LexElement element_from_json(const Json& j, const ForestPoset& host);

// {"poset": "<spec>", "upper_set": ["b", "c"]}
Json upper_set_to_json(const UpperSet& u, const std::string& poset_spec);
UpperSet upper_set_from_json(const Json& j, const ForestPoset& host);

// {"elements": [...], "covers": [["a","b"], ...]}
Json poset_to_json(const ForestPoset& p);
ForestPoset poset_from_json(const Json& j);

// {"S": [...], "grid": "1/n", "terms": [{"coeff": "3", "exp": "1/2"}, ...],
//  "cutoff": 1, "overrides": {"1": "2", "2": [{"coeff": ..., "exp": ...}]}}
// Constant overrides are written as plain rational strings; germ-valued ones
// as term arrays. "S", "grid" and "cutoff" may be omitted on input; S is then
// inferred from the exponents present.
Json root_to_json(const RootFunction& f);
RootFunction root_from_json(const Json& j, long max_bits = kDefaultPrecisionCap);

Json germ_to_json_terms(const Germ& g);
Germ germ_from_json_terms(const Json& j);

// Two-space indent plus a trailing newline; byte-stable for golden files.
std::string canonical_dump(const Json& j);

}  // namespace lexlat
