#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "lrk/shapes.hpp"

namespace lrk {

/// Lattice vertex (x,y) of the triangular board; x,y >= 0 and x+y <= n.
/// Its position in the plane is (x + y/2, y*sqrt(3)/2).
struct Vertex {
  int x = 0;
  int y = 0;
  auto operator<=>(const Vertex&) const = default;
};

enum class CellType : std::uint8_t { Up, Down };

/// U(x,y) has corners (x,y),(x+1,y),(x,y+1); D(x,y) has corners
/// (x+1,y),(x,y+1),(x+1,y+1).
struct TriCell {
  int x = 0;
  int y = 0;
  CellType type = CellType::Up;

  /// Solver order: bottom row first, left to right, U before D.
  auto key() const { return std::tuple(y, x, type); }
  bool operator==(const TriCell&) const = default;
  bool operator<(const TriCell& o) const { return key() < o.key(); }
};

/// H(x,y): (x,y)-(x+1,y). A(x,y): (x,y)-(x,y+1). B(x,y): (x+1,y)-(x,y+1).
enum class EdgeType : std::uint8_t { H, A, B };

struct Edge {
  EdgeType type = EdgeType::H;
  int x = 0;
  int y = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Edge leaving `from` in direction dir*60 degrees, dir in 0..5.
Edge edge_from(Vertex from, int dir);
Vertex step(Vertex from, int dir);

enum class Mode { Classical, K, Tri, Hex, HexR, HexExtended };

std::string_view mode_name(Mode mode);
/// Throws RuleError on unknown names.
Mode parse_mode(std::string_view name);
const std::vector<Mode>& all_modes();

struct WalkStep {
  int dir = 0;
  int label = 0;
};

/// A puzzle piece given by its boundary walk, with the derived cell and
/// edge sets in coordinates relative to its anchor (the least cell).
struct Tile {
  std::string id;
  std::vector<WalkStep> walk;
  std::string fill;
  char glyph = '?';

  CellType anchor_type = CellType::Up;
  std::vector<TriCell> cells;  // relative to the anchor's (x,y); sorted
  struct LabeledEdge {
    Edge edge;
    int label;
    auto operator<=>(const LabeledEdge&) const = default;
  };
  std::vector<LabeledEdge> edges;  // boundary edges relative to the anchor; sorted
  Vertex walk_start;               // relative to the anchor

  /// Builds the derived fields; throws MalformedInputError on a walk that
  /// does not close or encloses no cell.
  static Tile from_walk(std::string id, std::vector<WalkStep> walk, std::string fill, char glyph);
};

struct Catalog {
  Mode mode = Mode::Classical;
  int label_count = 2;
  std::vector<Tile> tiles;

  /// Index of the tile with this id; throws MalformedInputError if absent.
  std::size_t index_of(std::string_view id) const;
};

/// Built-in catalog for a mode.
const Catalog& catalog(Mode mode);
/// Parses a JSON list of tiles ({id, walk:[{dir,label}], fill, glyph}).
Catalog parse_catalog(Mode mode, std::string_view json_text);

/// Boundary labels: left from the bottom-left corner to the apex, right from
/// the apex to the bottom-right corner, bottom from left to right.
struct Boundary {
  int n = 0;
  int k = 0;
  BinaryString left;
  BinaryString right;
  BinaryString bottom;

  bool operator==(const Boundary&) const = default;
};

/// Checks the ambient constraint the mode needs and lays out the strings;
/// throws AmbientError naming the violated constraint.
Boundary build_boundary(const Partition& lambda, const Partition& mu, const Partition& nu,
                        const AmbientRectangle& amb, Mode mode = Mode::Classical);
/// The rectangle a partition must fit for the mode: rows x columns.
std::pair<int, int> mode_box(Mode mode, const AmbientRectangle& amb);
/// Smallest ambient rectangle the mode accepts for the triple.
AmbientRectangle minimal_ambient(Mode mode, const Partition& lambda, const Partition& mu, const Partition& nu);

struct Placement {
  std::size_t tile = 0;  // index into the catalog
  TriCell anchor;
  bool operator==(const Placement&) const = default;
};

/// A tiling: placements sorted by anchor.
struct Puzzle {
  Mode mode = Mode::Classical;
  Boundary boundary;
  std::vector<Placement> placements;

  int n() const { return boundary.n; }
  const Catalog& tiles() const { return catalog(mode); }
  bool operator==(const Puzzle& o) const {
    return mode == o.mode && boundary == o.boundary && placements == o.placements;
  }
};

/// Label of every board edge after tiling (-1 for edges inside a tile).
class EdgeLabels {
 public:
  explicit EdgeLabels(const Puzzle& p);
  int at(Edge e) const;
  /// Tile index and anchor covering a cell.
  const Placement& owner(TriCell c) const;

 private:
  int n_ = 0;
  std::vector<std::int8_t> labels_;
  std::vector<int> owner_;
  std::vector<Placement> placements_;
};

std::uint64_t count_tilings(const Boundary& b, const Catalog& cat);
std::vector<Puzzle> enumerate_tilings(const Boundary& b, const Catalog& cat);

/// Full validity check: cells partitioned, shared labels equal, boundary
/// labels as given. Returns an explanation on failure.
std::optional<std::string> check_puzzle(const Puzzle& p);

/// Reflect across a vertical line and swap labels 0 and 1; hex <-> hexR,
/// classical -> classical. Throws RuleError for other modes.
Puzzle mirror(const Puzzle& p);

/// Absolute cells covered by a placement.
std::vector<TriCell> placement_cells(const Tile& t, const Placement& p);
/// Absolute labelled boundary edges of a placement.
std::vector<Tile::LabeledEdge> placement_edges(const Tile& t, const Placement& p);

enum class RenderFormat { Ascii, Svg, Tikz, Json };
RenderFormat parse_render_format(std::string_view name);
std::string render(const Puzzle& p, RenderFormat format);

}  // namespace lrk
