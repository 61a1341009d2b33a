#pragma once

#include <string>

#include <json.hpp>

#include "motivic/epoly.hpp"
#include "motivic/ylaurent.hpp"

namespace motivic {

using ojson = nlohmann::ordered_json;

// Exponent rendering: decimal for integers, "a/2" for half-integers.
std::string exponent_string(int e2);
int parse_exponent_string(const std::string& s);

// Class record: [{"p": "...", "q": "...", "c": "..."}] sorted by (p, q);
// parse(serialize(c)) == c and the reserialization is byte-identical.
ojson class_to_json(const EPoly& c);
EPoly class_from_json(const ojson& j);

// chi_y record: [{"e": "...", "c": "..."}] sorted by exponent.
ojson ylaurent_to_json(const YLaurent& c);
YLaurent ylaurent_from_json(const ojson& j);

} // namespace motivic
