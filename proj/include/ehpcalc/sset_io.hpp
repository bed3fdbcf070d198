#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ehpcalc/simplicial.hpp"

namespace ehpcalc {

// {"basepoint": name, "dimensions": [{"dim": n, "generators": [{"name": ..., "faces": ["s1 s0 x", ...]}]}]}
nlohmann::ordered_json sset_to_json(const SSet& k);
SSet sset_from_json(const nlohmann::ordered_json& doc);

std::string print_sset(const SSet& k);
SSet parse_sset(std::string_view text);

// "s2 s0 name" -> (name, word). Throws ParseError on malformed prefixes.
std::pair<std::string, DegeneracyWord> split_simplex_name(std::string_view text);

}  // namespace ehpcalc
