#include "lrk/puzzles.hpp"

#include <algorithm>
#include <limits>

#include "lrk/error.hpp"

namespace lrk {

namespace {

bool cell_in_board(int n, TriCell c) {
  if (c.x < 0 || c.y < 0) return false;
  return c.type == CellType::Up ? c.x + c.y <= n - 1 : c.x + c.y <= n - 2;
}

bool edge_in_board(int n, Edge e) { return e.x >= 0 && e.y >= 0 && e.x + e.y <= n - 1; }

std::size_t cell_slot(int n, TriCell c) {
  return static_cast<std::size_t>((c.type == CellType::Up ? 0 : n * n) + c.y * n + c.x);
}

std::size_t edge_slot(int n, Edge e) {
  const int side = n + 1;
  return static_cast<std::size_t>(static_cast<int>(e.type) * side * side + e.y * side + e.x);
}

std::size_t edge_slots(int n) { return static_cast<std::size_t>(3 * (n + 1) * (n + 1)); }

// Boundary edges of the board with their prescribed labels.
std::vector<std::pair<Edge, int>> boundary_edges(const Boundary& b) {
  std::vector<std::pair<Edge, int>> out;
  for (int i = 0; i < b.n; ++i) {
    out.push_back({{EdgeType::H, i, 0}, b.bottom[i] - '0'});
    out.push_back({{EdgeType::A, 0, i}, b.left[i] - '0'});
    out.push_back({{EdgeType::B, i, b.n - 1 - i}, b.right[i] - '0'});
  }
  return out;
}

std::vector<TriCell> board_cells(int n) {
  std::vector<TriCell> cells;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x + y <= n - 1; ++x) {
      cells.push_back({x, y, CellType::Up});
      if (x + y <= n - 2) cells.push_back({x, y, CellType::Down});
    }
  }
  return cells;
}

struct FlatTile {
  CellType anchor_type;
  std::vector<TriCell> cells;
  std::vector<Tile::LabeledEdge> edges;
};

class Solver {
 public:
  Solver(const Boundary& b, const Catalog& cat)
      : n_(b.n), order_(board_cells(b.n)), owner_(static_cast<std::size_t>(2 * b.n * b.n), -1),
        labels_(edge_slots(b.n), -1) {
    if (b.left.length() != n_ || b.right.length() != n_ || b.bottom.length() != n_) {
      throw AmbientError("boundary strings must have length n");
    }
    for (const auto& [e, label] : boundary_edges(b)) {
      labels_[edge_slot(n_, e)] = static_cast<std::int8_t>(label);
    }
    for (const Tile& t : cat.tiles) tiles_.push_back({t.anchor_type, t.cells, t.edges});
  }

  template <class Visit>
  void run(Visit&& visit) {
    std::vector<Placement> stack;
    dfs(0, stack, visit);
  }

 private:
  template <class Visit>
  void dfs(std::size_t pos, std::vector<Placement>& stack, Visit& visit) {
    while (pos < order_.size() && owner_[cell_slot(n_, order_[pos])] >= 0) ++pos;
    if (pos == order_.size()) {
      visit(stack);
      return;
    }
    const TriCell anchor = order_[pos];
    for (std::size_t ti = 0; ti < tiles_.size(); ++ti) {
      const FlatTile& t = tiles_[ti];
      if (t.anchor_type != anchor.type) continue;
      if (!fits(t, anchor)) continue;
      const std::size_t mark = undo_.size();
      place(t, anchor, static_cast<int>(stack.size()));
      stack.push_back({ti, anchor});
      dfs(pos + 1, stack, visit);
      stack.pop_back();
      unplace(t, anchor, mark);
    }
  }

  bool fits(const FlatTile& t, TriCell a) const {
    for (const TriCell& rel : t.cells) {
      const TriCell c{a.x + rel.x, a.y + rel.y, rel.type};
      if (!cell_in_board(n_, c) || owner_[cell_slot(n_, c)] >= 0) return false;
    }
    for (const auto& le : t.edges) {
      const Edge e{le.edge.type, a.x + le.edge.x, a.y + le.edge.y};
      const int current = labels_[edge_slot(n_, e)];
      if (current >= 0 && current != le.label) return false;
    }
    return true;
  }

  void place(const FlatTile& t, TriCell a, int id) {
    for (const TriCell& rel : t.cells) owner_[cell_slot(n_, {a.x + rel.x, a.y + rel.y, rel.type})] = id;
    for (const auto& le : t.edges) {
      const std::size_t slot = edge_slot(n_, {le.edge.type, a.x + le.edge.x, a.y + le.edge.y});
      if (labels_[slot] < 0) {
        labels_[slot] = static_cast<std::int8_t>(le.label);
        undo_.push_back(slot);
      }
    }
  }

  void unplace(const FlatTile& t, TriCell a, std::size_t mark) {
    for (const TriCell& rel : t.cells) owner_[cell_slot(n_, {a.x + rel.x, a.y + rel.y, rel.type})] = -1;
    while (undo_.size() > mark) {
      labels_[undo_.back()] = -1;
      undo_.pop_back();
    }
  }

  int n_;
  std::vector<TriCell> order_;
  std::vector<int> owner_;
  std::vector<std::int8_t> labels_;
  std::vector<std::size_t> undo_;
  std::vector<FlatTile> tiles_;
};

Mode mirrored_mode(Mode m) {
  switch (m) {
    case Mode::Classical:
      return Mode::Classical;
    case Mode::Hex:
      return Mode::HexR;
    case Mode::HexR:
      return Mode::Hex;
    default:
      throw RuleError("mirror is defined for classical, hex and hexR puzzles only");
  }
}

}  // namespace

std::pair<int, int> mode_box(Mode mode, const AmbientRectangle& amb) {
  switch (mode) {
    case Mode::Hex:
      return {amb.k, amb.width() - 1};
    case Mode::HexR:
      return {amb.k - 1, amb.width()};
    default:
      return {amb.k, amb.width()};
  }
}

Boundary build_boundary(const Partition& lambda, const Partition& mu, const Partition& nu,
                        const AmbientRectangle& amb, Mode mode) {
  const auto [rows, cols] = mode_box(mode, amb);
  const auto check = [&](const Partition& p, std::string_view name) {
    if (p.length() > rows || p.width() > cols) {
      std::string rule = mode == Mode::Hex    ? "rows <= k, columns <= n-k-1"
                         : mode == Mode::HexR ? "rows <= k-1, columns <= n-k"
                                              : "rows <= k, columns <= n-k";
      throw AmbientError(std::string(name) + "=(" + p.to_string() + ") does not fit the " +
                         std::to_string(std::max(rows, 0)) + "x" + std::to_string(std::max(cols, 0)) +
                         " box required by " + std::string(mode_name(mode)) + " puzzles with n=" +
                         std::to_string(amb.n) + ", k=" + std::to_string(amb.k) + " (" + rule + ")");
    }
  };
  check(lambda, "lambda");
  check(mu, "mu");
  check(nu, "nu");
  return {amb.n, amb.k, to_binary_string(lambda, amb), to_binary_string(mu, amb), to_binary_string(nu, amb)};
}

AmbientRectangle minimal_ambient(Mode mode, const Partition& lambda, const Partition& mu, const Partition& nu) {
  int k = std::max({lambda.length(), mu.length(), nu.length()});
  int width = std::max({lambda.width(), mu.width(), nu.width()});
  if (mode == Mode::Hex) ++width;
  if (mode == Mode::HexR) ++k;
  if (k + width == 0) width = 1;
  return AmbientRectangle(k + width, k);
}

std::vector<TriCell> placement_cells(const Tile& t, const Placement& p) {
  std::vector<TriCell> out;
  for (const TriCell& rel : t.cells) out.push_back({p.anchor.x + rel.x, p.anchor.y + rel.y, rel.type});
  return out;
}

std::vector<Tile::LabeledEdge> placement_edges(const Tile& t, const Placement& p) {
  std::vector<Tile::LabeledEdge> out;
  for (const auto& le : t.edges) {
    out.push_back({{le.edge.type, p.anchor.x + le.edge.x, p.anchor.y + le.edge.y}, le.label});
  }
  return out;
}

EdgeLabels::EdgeLabels(const Puzzle& p)
    : n_(p.n()), labels_(edge_slots(p.n()), -1), owner_(static_cast<std::size_t>(2 * p.n() * p.n()), -1),
      placements_(p.placements) {
  const Catalog& cat = p.tiles();
  for (std::size_t i = 0; i < placements_.size(); ++i) {
    const Tile& t = cat.tiles.at(placements_[i].tile);
    for (const TriCell& c : placement_cells(t, placements_[i])) {
      if (cell_in_board(n_, c)) owner_[cell_slot(n_, c)] = static_cast<int>(i);
    }
    for (const auto& le : placement_edges(t, placements_[i])) {
      if (edge_in_board(n_, le.edge)) labels_[edge_slot(n_, le.edge)] = static_cast<std::int8_t>(le.label);
    }
  }
}

int EdgeLabels::at(Edge e) const {
  if (!edge_in_board(n_, e)) throw StructureError("edge outside the board");
  return labels_[edge_slot(n_, e)];
}

const Placement& EdgeLabels::owner(TriCell c) const {
  if (!cell_in_board(n_, c) || owner_[cell_slot(n_, c)] < 0) throw StructureError("cell not covered");
  return placements_[static_cast<std::size_t>(owner_[cell_slot(n_, c)])];
}

std::uint64_t count_tilings(const Boundary& b, const Catalog& cat) {
  std::uint64_t total = 0;
  Solver solver(b, cat);
  solver.run([&](const std::vector<Placement>&) {
    if (total == std::numeric_limits<std::uint64_t>::max()) throw OverflowError("tiling count overflow");
    ++total;
  });
  return total;
}

std::vector<Puzzle> enumerate_tilings(const Boundary& b, const Catalog& cat) {
  std::vector<Puzzle> out;
  Solver solver(b, cat);
  solver.run([&](const std::vector<Placement>& stack) { out.push_back({cat.mode, b, stack}); });
  return out;
}

std::optional<std::string> check_puzzle(const Puzzle& p) {
  const int n = p.n();
  const Boundary& b = p.boundary;
  if (b.left.length() != n || b.right.length() != n || b.bottom.length() != n) {
    return "boundary strings must have length n";
  }
  const Catalog& cat = p.tiles();
  std::vector<int> owner(static_cast<std::size_t>(2 * n * n), -1);
  std::vector<std::int8_t> labels(edge_slots(n), -1);
  for (std::size_t i = 0; i < p.placements.size(); ++i) {
    const Placement& pl = p.placements[i];
    if (pl.tile >= cat.tiles.size()) return "placement refers to an unknown tile";
    const Tile& t = cat.tiles[pl.tile];
    for (const TriCell& c : placement_cells(t, pl)) {
      if (!cell_in_board(n, c)) return "tile " + t.id + " leaves the board";
      int& o = owner[cell_slot(n, c)];
      if (o >= 0) return "tiles overlap at (" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
      o = static_cast<int>(i);
    }
    for (const auto& le : placement_edges(t, pl)) {
      std::int8_t& l = labels[edge_slot(n, le.edge)];
      if (l >= 0 && l != le.label) {
        return "label mismatch on edge (" + std::to_string(le.edge.x) + "," + std::to_string(le.edge.y) + ")";
      }
      l = static_cast<std::int8_t>(le.label);
    }
  }
  for (const TriCell& c : board_cells(n)) {
    if (owner[cell_slot(n, c)] < 0) return "cell (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") uncovered";
  }
  for (const auto& [e, label] : boundary_edges(b)) {
    if (labels[edge_slot(n, e)] != label) return "boundary label mismatch";
  }
  for (std::size_t i = 1; i < p.placements.size(); ++i) {
    if (!(p.placements[i - 1].anchor < p.placements[i].anchor)) return "placements are not sorted by anchor";
  }
  return std::nullopt;
}

Puzzle mirror(const Puzzle& p) {
  const Mode target_mode = mirrored_mode(p.mode);
  const Catalog& source = p.tiles();
  const Catalog& target = catalog(target_mode);
  const int n = p.n();

  const auto flip_cell = [n](TriCell c) {
    return c.type == CellType::Up ? TriCell{n - c.x - c.y - 1, c.y, CellType::Up}
                                  : TriCell{n - c.x - c.y - 2, c.y, CellType::Down};
  };
  const auto flip_edge = [n](Edge e) {
    const int x = n - e.x - e.y - 1;
    switch (e.type) {
      case EdgeType::H:
        return Edge{EdgeType::H, x, e.y};
      case EdgeType::A:
        return Edge{EdgeType::B, x, e.y};
      case EdgeType::B:
        return Edge{EdgeType::A, x, e.y};
    }
    return e;
  };

  Puzzle out;
  out.mode = target_mode;
  out.boundary = {n, n - p.boundary.k, p.boundary.right.reversed_complement(), p.boundary.left.reversed_complement(),
                  p.boundary.bottom.reversed_complement()};
  for (const Placement& pl : p.placements) {
    const Tile& t = source.tiles.at(pl.tile);
    std::vector<TriCell> cells;
    for (const TriCell& c : placement_cells(t, pl)) cells.push_back(flip_cell(c));
    std::sort(cells.begin(), cells.end());
    const TriCell anchor = cells.front();
    std::vector<TriCell> rel_cells;
    for (const TriCell& c : cells) rel_cells.push_back({c.x - anchor.x, c.y - anchor.y, c.type});
    std::vector<Tile::LabeledEdge> rel_edges;
    for (const auto& le : placement_edges(t, pl)) {
      const Edge e = flip_edge(le.edge);
      rel_edges.push_back({{e.type, e.x - anchor.x, e.y - anchor.y}, le.label == 0 ? 1 : le.label == 1 ? 0 : le.label});
    }
    std::sort(rel_edges.begin(), rel_edges.end());
    std::optional<std::size_t> match;
    for (std::size_t i = 0; i < target.tiles.size(); ++i) {
      if (target.tiles[i].cells == rel_cells && target.tiles[i].edges == rel_edges) match = i;
    }
    if (!match) throw StructureError("mirror image of tile " + t.id + " is not in the " +
                                     std::string(mode_name(target_mode)) + " catalog");
    out.placements.push_back({*match, anchor});
  }
  std::sort(out.placements.begin(), out.placements.end(),
            [](const Placement& a, const Placement& b) { return a.anchor < b.anchor; });
  return out;
}

}  // namespace lrk
