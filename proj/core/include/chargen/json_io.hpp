#pragma once

#include "chargen/posetgraph.hpp"

#include <nlohmann/json.hpp>

namespace chargen {

using json = nlohmann::ordered_json;

// Serialization is deterministic: terms appear in the canonical grade-then-lex
// order and object keys in fixed insertion order.
json to_json(const CharPoly &p);
json to_json(const GenSeries &s);
json to_json(const GeneratorGraph &g);

CharPoly charpoly_from_json(int rank, const json &j);
GenSeries genseries_from_json(const json &j);

// Wrap a payload with the versioned envelope {"schema": 1, ...}.
json envelope(const std::string &kind, json payload);

// Parse {"rank": r, "cartan": [[...], ...]} into an algebra.
AlgebraSpec algebra_from_json(const std::string &name, const json &j);

} // namespace chargen
