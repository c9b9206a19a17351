#pragma once

#include <string>

#include <json.hpp>

#include "eqc/acyc.hpp"
#include "eqc/geosym.hpp"
#include "eqc/tomdieck.hpp"
#include "eqc/twisted.hpp"

namespace eqc::jsonio {

// insertion-ordered JSON keeps emitted output byte-stable
using json = nlohmann::ordered_json;

// Parsers throw ValidationError with a JSON-pointer path on schema
// violations.  Accepted group forms: a name string ("trivial", "C<n>",
// "S<n>", "D<n>", "Q8"), {"kind":"product","factors":[...]}, or
// {"kind":"perm","degree":d,"generators":[[...],...]}.
GroupRef group_from_json(const json& j, const std::string& path);
json group_to_json(const GroupRef& g);

Subgroup subgroup_from_json(const GroupRef& parent, const json& j,
                            const std::string& path);
json subgroup_to_json(const Subgroup& s);

// Bisets: full tables {"left","right","n","lact","ract"} or the shorthands
// {"kind":"left_regular"|"trivial"|"biregular"|"coset", ...}.
BiSet biset_from_json(const json& j, const std::string& path);
json biset_to_json(const BiSet& x);

BundleData bundle_from_json(const json& j, const std::string& path);
json bundle_to_json(const BundleData& b);

// V entries may be the string "regular" (the regular representation of the
// right cyclic group) or a full biset.
// When `check` is true, semantic violations (acyc_validate) are thrown as
// ValidationError; the validate command parses with check = false.
AcycData acyc_from_json(const json& j, const std::string& path,
                        bool check = true);
json acyc_to_json(const AcycData& d);

WreathHom wreath_hom_from_json(const json& j, const std::string& path);
json wreath_hom_to_json(const WreathHom& h);
json wreath_elem_to_json(const WreathElem& x);

json hom_to_json(const GroupHom& h);

// schema helpers
const json& need(const json& j, const char* key, const std::string& path);
int need_int(const json& j, const char* key, const std::string& path);
std::vector<int> int_list(const json& j, const std::string& path);

}  // namespace eqc::jsonio
