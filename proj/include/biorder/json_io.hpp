#ifndef BIORDER_JSON_IO_HPP
#define BIORDER_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "biorder/bipoly.hpp"
#include "biorder/graph.hpp"
#include "biorder/poset.hpp"

namespace biorder {

// {"terms":[{"dx":int,"dy":int,"num":"...","den":"..."}, ...]} in canonical order.
void to_json(nlohmann::json& j, const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

// {"n": int, "covers": [[a,b],...], "celeste": [ints]}. Emits cover pairs.
void to_json(nlohmann::json& j, const BicoloredPoset& p);
BicoloredPoset poset_from_json(const nlohmann::json& j);

// {"n": int, "edges": [[u,v],...]}
void to_json(nlohmann::json& j, const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Parses a file; throws InputError on unreadable files or malformed JSON.
nlohmann::json read_json_file(const std::string& path);

}  // namespace biorder

#endif  // BIORDER_JSON_IO_HPP
