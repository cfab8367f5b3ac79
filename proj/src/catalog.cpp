#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>

#include <json.hpp>

#include "lrk/error.hpp"
#include "lrk/puzzles.hpp"

namespace lrk {

namespace detail {
extern const std::string_view kCatalogJson;
}

namespace {

constexpr std::array<std::pair<int, int>, 6> kDirections{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

constexpr std::array<std::pair<Mode, std::string_view>, 6> kModeNames{{
    {Mode::Classical, "classical"},
    {Mode::K, "K"},
    {Mode::Tri, "tri"},
    {Mode::Hex, "hex"},
    {Mode::HexR, "hexR"},
    {Mode::HexExtended, "hex-extended"},
}};

struct Point {
  double x;
  double y;
};

Point embed(double x, double y) { return {x + y / 2.0, y * std::sqrt(3.0) / 2.0}; }

bool inside(const std::vector<Point>& poly, Point p) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    if ((poly[i].y > p.y) != (poly[j].y > p.y) &&
        p.x < (poly[j].x - poly[i].x) * (p.y - poly[i].y) / (poly[j].y - poly[i].y) + poly[i].x) {
      in = !in;
    }
  }
  return in;
}

}  // namespace

Vertex step(Vertex from, int dir) {
  const auto [dx, dy] = kDirections.at(static_cast<std::size_t>(dir));
  return {from.x + dx, from.y + dy};
}

Edge edge_from(Vertex v, int dir) {
  switch (dir) {
    case 0:
      return {EdgeType::H, v.x, v.y};
    case 1:
      return {EdgeType::A, v.x, v.y};
    case 2:
      return {EdgeType::B, v.x - 1, v.y};
    case 3:
      return {EdgeType::H, v.x - 1, v.y};
    case 4:
      return {EdgeType::A, v.x, v.y - 1};
    case 5:
      return {EdgeType::B, v.x, v.y - 1};
  }
  throw MalformedInputError("walk direction must be in 0..5");
}

std::string_view mode_name(Mode mode) {
  for (const auto& [m, name] : kModeNames) {
    if (m == mode) return name;
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  for (const auto& [m, n] : kModeNames) {
    if (n == name) return m;
  }
  throw RuleError("unknown puzzle mode \"" + std::string(name) + "\"");
}

const std::vector<Mode>& all_modes() {
  static const std::vector<Mode> modes = [] {
    std::vector<Mode> out;
    for (const auto& [m, name] : kModeNames) out.push_back(m);
    return out;
  }();
  return modes;
}

Tile Tile::from_walk(std::string id, std::vector<WalkStep> walk, std::string fill, char glyph) {
  if (walk.size() < 3) throw MalformedInputError("tile " + id + ": walk too short");
  std::vector<Vertex> verts{{0, 0}};
  std::vector<LabeledEdge> edges;
  for (const WalkStep& s : walk) {
    if (s.dir < 0 || s.dir > 5) throw MalformedInputError("tile " + id + ": direction out of range");
    if (s.label < 0 || s.label > 9) throw MalformedInputError("tile " + id + ": label out of range");
    edges.push_back({edge_from(verts.back(), s.dir), s.label});
    verts.push_back(step(verts.back(), s.dir));
  }
  if (verts.back() != verts.front()) throw MalformedInputError("tile " + id + ": walk does not close");
  verts.pop_back();

  std::vector<Point> poly;
  int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const Vertex& v : verts) {
    poly.push_back(embed(v.x, v.y));
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  std::vector<TriCell> cells;
  for (int y = min_y; y <= max_y; ++y) {
    for (int x = min_x - (max_y - min_y); x <= max_x; ++x) {
      if (inside(poly, embed(x + 1.0 / 3, y + 1.0 / 3))) cells.push_back({x, y, CellType::Up});
      if (inside(poly, embed(x + 2.0 / 3, y + 2.0 / 3))) cells.push_back({x, y, CellType::Down});
    }
  }
  if (cells.empty()) throw MalformedInputError("tile " + id + ": walk encloses no cell");
  std::sort(cells.begin(), cells.end());
  const TriCell anchor = cells.front();

  Tile t;
  t.id = std::move(id);
  t.walk = std::move(walk);
  t.fill = std::move(fill);
  t.glyph = glyph;
  t.anchor_type = anchor.type;
  for (TriCell c : cells) t.cells.push_back({c.x - anchor.x, c.y - anchor.y, c.type});
  for (LabeledEdge e : edges) {
    e.edge.x -= anchor.x;
    e.edge.y -= anchor.y;
    t.edges.push_back(e);
  }
  std::sort(t.edges.begin(), t.edges.end());
  t.walk_start = {-anchor.x, -anchor.y};
  return t;
}

std::size_t Catalog::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (tiles[i].id == id) return i;
  }
  throw MalformedInputError("catalog " + std::string(mode_name(mode)) + " has no tile " + std::string(id));
}

Catalog parse_catalog(Mode mode, std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInputError(std::string("catalog JSON: ") + e.what());
  }
  if (!doc.is_array()) throw MalformedInputError("catalog JSON must be a list of tiles");
  Catalog cat;
  cat.mode = mode;
  int max_label = 1;
  try {
    for (const auto& item : doc) {
      std::vector<WalkStep> walk;
      for (const auto& s : item.at("walk")) {
        walk.push_back({s.at("dir").get<int>(), s.at("label").get<int>()});
        max_label = std::max(max_label, walk.back().label);
      }
      const std::string glyph = item.value("glyph", std::string("?"));
      cat.tiles.push_back(Tile::from_walk(item.at("id").get<std::string>(), std::move(walk),
                                          item.value("fill", std::string("#cccccc")), glyph.empty() ? '?' : glyph[0]));
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInputError(std::string("catalog JSON: ") + e.what());
  }
  cat.label_count = max_label + 1;
  return cat;
}

const Catalog& catalog(Mode mode) {
  static const std::map<Mode, Catalog> catalogs = [] {
    std::map<Mode, Catalog> out;
    const auto doc = nlohmann::json::parse(detail::kCatalogJson);
    for (const auto& [m, name] : kModeNames) out.emplace(m, parse_catalog(m, doc.at(std::string(name)).dump()));
    return out;
  }();
  return catalogs.at(mode);
}

}  // namespace lrk
