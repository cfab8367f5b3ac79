#pragma once

#include <json.hpp>

#include "lrk/puzzles.hpp"
#include "lrk/tableaux.hpp"

namespace lrk {

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Entry& e);
/// {shape:{kind, outer, inner} or {kind, top, bottom}, kind, cells:[{row,col,entry}]}
nlohmann::json to_json(const Tableau& t);
/// {mode, n, k, boundary:{left,right,bottom}, placements:[{tile,x,y,cell}]}
nlohmann::json to_json(const Puzzle& p);
nlohmann::json to_json(const Catalog& c);

/// Inverses of the above; throw MalformedInputError on bad input, including
/// puzzles that fail check_puzzle.
Entry entry_from_json(const nlohmann::json& j);
Tableau tableau_from_json(const nlohmann::json& j);
Puzzle puzzle_from_json(const nlohmann::json& j);

}  // namespace lrk
