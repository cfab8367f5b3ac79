#include "lrk/json.hpp"

#include <algorithm>

#include "lrk/error.hpp"

namespace lrk {

using nlohmann::json;

json to_json(const Partition& p) { return p.parts(); }

json to_json(const Entry& e) {
  switch (e.kind) {
    case EntryKind::Number:
      return {{"num", e.value()}};
    case EntryKind::Set:
      return {{"set", e.values}};
    case EntryKind::Circled:
      return {{"circ", e.value()}};
    case EntryKind::Genomic:
      return {{"gen", {e.value(), e.gene}}};
  }
  return nullptr;
}

json to_json(const Tableau& t) {
  json shape;
  if (t.shape_kind() == ShapeKind::Oplus) {
    shape = {{"kind", "oplus"}, {"top", to_json(t.oplus().top)}, {"bottom", to_json(t.oplus().bottom)}};
  } else {
    shape = {{"kind", "skew"}, {"outer", to_json(t.skew().outer)}, {"inner", to_json(t.skew().inner)}};
  }
  json cells = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    cells.push_back({{"row", t.cells()[i].row}, {"col", t.cells()[i].col}, {"entry", to_json(t.entries()[i])}});
  }
  return {{"shape", shape}, {"kind", std::string(to_string(t.kind()))}, {"cells", cells}};
}

json to_json(const Puzzle& p) {
  const Catalog& cat = p.tiles();
  json placements = json::array();
  for (const Placement& pl : p.placements) {
    placements.push_back({{"tile", cat.tiles.at(pl.tile).id},
                          {"x", pl.anchor.x},
                          {"y", pl.anchor.y},
                          {"cell", pl.anchor.type == CellType::Up ? "U" : "D"}});
  }
  return {{"mode", std::string(mode_name(p.mode))},
          {"n", p.n()},
          {"k", p.boundary.k},
          {"boundary",
           {{"left", p.boundary.left.bits()}, {"right", p.boundary.right.bits()}, {"bottom", p.boundary.bottom.bits()}}},
          {"placements", placements}};
}

json to_json(const Catalog& c) {
  json tiles = json::array();
  for (const Tile& t : c.tiles) {
    json walk = json::array();
    for (const WalkStep& s : t.walk) walk.push_back({{"dir", s.dir}, {"label", s.label}});
    tiles.push_back({{"id", t.id}, {"walk", walk}, {"fill", t.fill}, {"glyph", std::string(1, t.glyph)}});
  }
  return tiles;
}

namespace {

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

TableauKind kind_from_string(const std::string& s) {
  for (TableauKind k : {TableauKind::Plain, TableauKind::SetValued, TableauKind::CircleRight, TableauKind::CircleLeft,
                        TableauKind::Genomic}) {
    if (to_string(k) == s) return k;
  }
  throw MalformedInputError("unknown tableau kind \"" + s + "\"");
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw MalformedInputError(std::string("JSON: ") + e.what());
  }
}

}  // namespace

Entry entry_from_json(const json& j) {
  return guarded([&] {
    if (j.contains("num")) return Entry::number(j.at("num").get<int>());
    if (j.contains("set")) return Entry::set(j.at("set").get<std::vector<int>>());
    if (j.contains("circ")) return Entry::circled(j.at("circ").get<int>());
    if (j.contains("gen")) return Entry::genomic(j.at("gen").at(0).get<int>(), j.at("gen").at(1).get<int>());
    throw MalformedInputError("entry needs one of num, set, circ, gen");
  });
}

Tableau tableau_from_json(const json& j) {
  return guarded([&] {
    const json& shape = j.at("shape");
    const TableauKind kind = kind_from_string(j.at("kind").get<std::string>());
    std::map<Cell, Entry> by_cell;
    for (const json& c : j.at("cells")) {
      by_cell[{c.at("row").get<int>(), c.at("col").get<int>()}] = entry_from_json(c.at("entry"));
    }
    std::vector<Entry> entries;
    for (const auto& [cell, e] : by_cell) entries.push_back(e);
    if (shape.at("kind") == "oplus") {
      OplusShape s{partition_from_json(shape.at("top")), partition_from_json(shape.at("bottom"))};
      if (s.cells() != [&] {
            std::vector<Cell> cs;
            for (const auto& [cell, e] : by_cell) cs.push_back(cell);
            return cs;
          }()) {
        throw MalformedInputError("cells do not match the shape");
      }
      return Tableau(s, kind, entries);
    }
    SkewShape s(partition_from_json(shape.at("outer")), partition_from_json(shape.at("inner")));
    std::vector<Cell> cs;
    for (const auto& [cell, e] : by_cell) cs.push_back(cell);
    if (cs != s.cells()) throw MalformedInputError("cells do not match the shape");
    return Tableau(s, kind, entries);
  });
}

Puzzle puzzle_from_json(const json& j) {
  return guarded([&] {
    Puzzle p;
    p.mode = parse_mode(j.at("mode").get<std::string>());
    const json& b = j.at("boundary");
    p.boundary = {j.at("n").get<int>(), j.at("k").get<int>(), BinaryString(b.at("left").get<std::string>()),
                  BinaryString(b.at("right").get<std::string>()), BinaryString(b.at("bottom").get<std::string>())};
    const Catalog& cat = p.tiles();
    for (const json& pl : j.at("placements")) {
      const std::string cell = pl.at("cell").get<std::string>();
      if (cell != "U" && cell != "D") throw MalformedInputError("cell must be U or D");
      p.placements.push_back({cat.index_of(pl.at("tile").get<std::string>()),
                              {pl.at("x").get<int>(), pl.at("y").get<int>(), cell == "U" ? CellType::Up : CellType::Down}});
    }
    std::sort(p.placements.begin(), p.placements.end(),
              [](const Placement& a, const Placement& b) { return a.anchor < b.anchor; });
    if (auto err = check_puzzle(p)) throw MalformedInputError("not a valid puzzle: " + *err);
    return p;
  });
}

}  // namespace lrk
