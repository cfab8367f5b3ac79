#include "lrk/bijection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "lrk/error.hpp"

namespace lrk {

namespace {

using Row = std::vector<int>;

void require_beam_mode(Mode mode) {
  if (mode != Mode::Hex && mode != Mode::HexR) {
    throw StructureError("beam decomposition needs a hex or hexR puzzle, got " + std::string(mode_name(mode)));
  }
}

/// Position of the i-th '1' (1-indexed) in a boundary string.
int one_position(const BinaryString& s, int i) {
  int seen = 0;
  for (int p = 0; p < s.length(); ++p) {
    if (s[p] == '1' && ++seen == i) return p;
  }
  throw StructureError("boundary string " + s.bits() + " has fewer than " + std::to_string(i) + " ones");
}

std::vector<int> gaps(const Partition& p, int k) {
  std::vector<int> g;
  for (int i = 1; i <= k; ++i) g.push_back(p.row(i) - p.row(i + 1));
  return g;
}

/// A vertex where beams meet: a cap above a beam (up 1-triangle or hexagon)
/// or a feed below one (down 1-triangle or hexR piece). (x,y) is the cell of
/// a triangle or the bottom edge H(x,y) of a hexagonal piece.
struct Junction {
  int x = 0;
  int y = 0;
  bool hexagonal = false;
};

struct Outputs {
  int right_x, right_y;  // first edge B of the path going right
  int left_x, left_y;    // first edge A of the path going up-left
};

Outputs cap_outputs(const Junction& v) {
  if (v.hexagonal) return {v.x, v.y + 1, v.x - 1, v.y + 1};
  return {v.x, v.y, v.x, v.y};
}

/// Bottom edge of the beam leaving a feed upwards.
std::pair<int, int> feed_top(const Junction& w) {
  if (w.hexagonal) return {w.x - 1, w.y + 2};
  return {w.x, w.y + 1};
}

class Tracer {
 public:
  explicit Tracer(const Puzzle& p) : p_(p), cat_(p.tiles()), labels_(p), n_(p.n()) {}

  int rhombi_seen() const { return rhombi_; }

  /// Climbs rhombi from H(x,y); returns the beam length and its cap.
  std::pair<int, Junction> beam_up(int x, int y) {
    int len = 0;
    while (x + y <= n_ - 1 && id_at({x, y, CellType::Up}) == "rhombus-b") {
      ++len;
      ++rhombi_;
      ++y;
    }
    if (x + y > n_ - 1) throw StructureError("beam leaves the board");
    const std::string& id = id_at({x, y, CellType::Up});
    if (id == "up1") return {len, {x, y, false}};
    if (id == "hex" && has_edge({x, y, CellType::Up}, {EdgeType::H, x, y}, 1)) return {len, {x, y, true}};
    throw StructureError("beam ending at H(" + std::to_string(x) + "," + std::to_string(y) + ") has no cap");
  }

  /// Follows rhombi rightwards from B(x,y); nullopt at the right boundary
  /// (reported in `boundary_x`).
  std::optional<Junction> right_path(int x, int y, int& boundary_x) {
    while (true) {
      if (x + y == n_ - 1) {
        boundary_x = x;
        return std::nullopt;
      }
      const TriCell c{x, y, CellType::Down};
      const std::string& id = id_at(c);
      if (id == "rhombus-a") {
        ++rhombi_;
        ++x;
        continue;
      }
      if (id == "down1") return Junction{x, y, false};
      if (id == "hexR" && has_edge(c, {EdgeType::B, x, y}, 1)) return Junction{x + 1, y, true};
      throw StructureError("path along B edges meets " + id);
    }
  }

  /// Follows rhombi up-left from A(x,y); nullopt at the left boundary
  /// (reported in `boundary_y`).
  std::optional<Junction> left_path(int x, int y, int& boundary_y) {
    while (true) {
      if (x == 0) {
        boundary_y = y;
        return std::nullopt;
      }
      const TriCell c{x - 1, y, CellType::Down};
      const std::string& id = id_at(c);
      if (id == "rhombus-h") {
        ++rhombi_;
        --x;
        ++y;
        continue;
      }
      if (id == "down1") return Junction{x - 1, y, false};
      if (id == "hexR" && has_edge(c, {EdgeType::A, x, y}, 1)) return Junction{x - 1, y, true};
      throw StructureError("path along A edges meets " + id);
    }
  }

 private:
  const std::string& id_at(TriCell c) const { return cat_.tiles[labels_.owner(c).tile].id; }

  bool has_edge(TriCell c, Edge e, int label) const {
    const Placement& pl = labels_.owner(c);
    for (const auto& le : placement_edges(cat_.tiles[pl.tile], pl)) {
      if (le.edge == e && le.label == label) return true;
    }
    return false;
  }

  const Puzzle& p_;
  const Catalog& cat_;
  EdgeLabels labels_;
  int n_;
  int rhombi_ = 0;
};

/// Places pieces, refusing overlaps and cells off the board.
class Builder {
 public:
  Builder(Mode mode, int n) : cat_(catalog(mode)), n_(n) {}

  void at_anchor(std::string_view id, TriCell anchor) {
    const std::size_t t = cat_.index_of(id);
    add({t, anchor});
  }

  void at_walk_start(std::string_view id, int x, int y) {
    const std::size_t t = cat_.index_of(id);
    const Tile& tile = cat_.tiles[t];
    add({t, {x - tile.walk_start.x, y - tile.walk_start.y, tile.anchor_type}});
  }

  void beam(int x, int y, int len) {
    for (int t = 0; t < len; ++t) at_anchor("rhombus-b", {x, y + t, CellType::Up});
  }
  void right(int x, int y, int len) {
    for (int t = 0; t < len; ++t) at_anchor("rhombus-a", {x + t, y, CellType::Down});
  }
  void left(int x, int y, int len) {
    for (int t = 0; t < len; ++t) at_anchor("rhombus-h", {x - t - 1, y + t, CellType::Down});
  }
  void cap(const Junction& v) {
    if (v.hexagonal) {
      at_walk_start("hex", v.x + 1, v.y);
    } else {
      at_anchor("up1", {v.x, v.y, CellType::Up});
    }
  }
  void feed(const Junction& w) {
    if (w.hexagonal) {
      at_walk_start("hexR", w.x, w.y);
    } else {
      at_anchor("down1", {w.x, w.y, CellType::Down});
    }
  }

  std::vector<Placement> finish() {
    for (int y = 0; y < n_; ++y) {
      for (int x = 0; x + y <= n_ - 1; ++x) {
        if (!used_.contains({x, y, CellType::Up})) at_anchor("up0", {x, y, CellType::Up});
        if (x + y <= n_ - 2 && !used_.contains({x, y, CellType::Down})) at_anchor("down0", {x, y, CellType::Down});
      }
    }
    std::sort(placements_.begin(), placements_.end(),
              [](const Placement& a, const Placement& b) { return a.anchor < b.anchor; });
    return placements_;
  }

 private:
  void add(Placement pl) {
    for (const TriCell& c : placement_cells(cat_.tiles[pl.tile], pl)) {
      const int limit = c.type == CellType::Up ? n_ - 1 : n_ - 2;
      if (c.x < 0 || c.y < 0 || c.x + c.y > limit) throw InvalidTableauError("a piece would leave the board");
      if (!used_.insert(c).second) throw InvalidTableauError("two pieces would overlap");
    }
    placements_.push_back(pl);
  }

  const Catalog& cat_;
  int n_;
  std::set<TriCell> used_;
  std::vector<Placement> placements_;
};

Partition lambda_of(const Boundary& b) { return from_binary_string(b.left); }
Partition mu_of(const Boundary& b) { return from_binary_string(b.right); }
Partition nu_of(const Boundary& b) { return from_binary_string(b.bottom); }

void check_square(const BeamDecomposition& d) {
  if (static_cast<int>(d.lengths.size()) != d.k || static_cast<int>(d.flags.size()) != d.k) {
    throw InvalidTableauError("beam table does not match k");
  }
}

}  // namespace

BeamDecomposition::BeamDecomposition(Mode m, int kk) : mode(m), k(kk) {
  for (int i = 1; i <= k; ++i) {
    lengths.emplace_back(static_cast<std::size_t>(i), 0);
    flags.emplace_back(static_cast<std::size_t>(i), false);
  }
}

int BeamDecomposition::flag_count() const {
  int c = 0;
  for (const auto& row : flags) c += static_cast<int>(std::count(row.begin(), row.end(), true));
  return c;
}

BeamDecomposition decompose(const Puzzle& p) {
  require_beam_mode(p.mode);
  const Boundary& b = p.boundary;
  const int k = b.k;
  const bool hex = p.mode == Mode::Hex;
  BeamDecomposition d(p.mode, k);
  d.lambda_gaps = gaps(lambda_of(b), k);
  d.nu_gaps = gaps(nu_of(b), k);
  Tracer tr(p);
  std::vector<std::vector<Junction>> caps(static_cast<std::size_t>(k));
  auto set = [&](int i, int j, int len, bool flag, Junction v) {
    d.lengths[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = len;
    d.flags[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = flag;
    caps[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(i));
    caps[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
  };
  auto cap = [&](int i, int j) { return caps[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };

  for (int i = 1; i <= k; ++i) {
    const auto [len, v] = tr.beam_up(one_position(b.bottom, i), 0);
    set(i, i, len, hex && v.hexagonal, v);
    for (int j = i - 1; j >= 1; --j) {
      const Outputs from_left = cap_outputs(cap(i - 1, j));
      const Outputs from_right = cap_outputs(cap(i, j + 1));
      int ignored = 0;
      const auto w1 = tr.right_path(from_left.right_x, from_left.right_y, ignored);
      const auto w2 = tr.left_path(from_right.left_x, from_right.left_y, ignored);
      if (!w1 || !w2 || w1->x != w2->x || w1->y != w2->y || w1->hexagonal != w2->hexagonal) {
        throw StructureError("beams (" + std::to_string(i - 1) + "," + std::to_string(j) + ") and (" +
                             std::to_string(i) + "," + std::to_string(j + 1) + ") do not meet");
      }
      const auto [tx, ty] = feed_top(*w1);
      const auto [l2, v2] = tr.beam_up(tx, ty);
      set(i, j, l2, hex ? v2.hexagonal : w1->hexagonal, v2);
    }
  }
  for (int i = 1; i <= k; ++i) {
    const Outputs o = cap_outputs(cap(i, 1));
    int y = -1;
    if (tr.left_path(o.left_x, o.left_y, y) || y != one_position(b.left, i)) {
      throw StructureError("beam (" + std::to_string(i) + ",1) misses the left boundary");
    }
  }
  for (int j = 1; j <= k; ++j) {
    const Outputs o = cap_outputs(cap(k, j));
    int x = -1;
    if (tr.right_path(o.right_x, o.right_y, x) || x != one_position(b.right, j)) {
      throw StructureError("beam (" + std::to_string(k) + "," + std::to_string(j) + ") misses the right boundary");
    }
  }
  int rhombi = 0;
  for (const Placement& pl : p.placements) {
    if (p.tiles().tiles[pl.tile].id.starts_with("rhombus")) ++rhombi;
  }
  if (rhombi != tr.rhombi_seen()) throw StructureError("some rhombi lie on no beam");
  return d;
}

Puzzle assemble(const BeamDecomposition& d, const Boundary& b) {
  require_beam_mode(d.mode);
  if (d.k != b.k) throw InvalidTableauError("beam table has k=" + std::to_string(d.k) + ", boundary k=" + std::to_string(b.k));
  check_square(d);
  const int k = d.k;
  const bool hex = d.mode == Mode::Hex;
  Builder out(d.mode, b.n);
  std::vector<std::vector<Junction>> caps(static_cast<std::size_t>(k));
  auto cap = [&](int i, int j) -> Junction& {
    auto& row = caps[static_cast<std::size_t>(i - 1)];
    row.resize(static_cast<std::size_t>(i));
    return row[static_cast<std::size_t>(j - 1)];
  };
  auto fail = [](const std::string& what) { throw InvalidTableauError("beams do not fit: " + what); };

  for (int i = 1; i <= k; ++i) {
    if (!hex && d.flag(i, i)) fail("a diagonal beam cannot be flagged in hexR");
    const int x = one_position(b.bottom, i);
    out.beam(x, 0, d.length(i, i));
    cap(i, i) = {x, d.length(i, i), hex && d.flag(i, i)};
    for (int j = i - 1; j >= 1; --j) {
      const Outputs from_left = cap_outputs(cap(i - 1, j));
      const Outputs from_right = cap_outputs(cap(i, j + 1));
      const bool hexr_feed = !hex && d.flag(i, j);
      const int y = from_left.right_y;
      const int l = y - from_right.left_y;
      const int x = from_right.left_x - l - 1;
      const int r = x - (hexr_feed ? 1 : 0) - from_left.right_x;
      if (l < 0 || r < 0) fail("beams (" + std::to_string(i) + "," + std::to_string(j) + ") cannot be fed");
      out.right(from_left.right_x, from_left.right_y, r);
      out.left(from_right.left_x, from_right.left_y, l);
      const Junction w{x, y, hexr_feed};
      out.feed(w);
      const auto [tx, ty] = feed_top(w);
      out.beam(tx, ty, d.length(i, j));
      cap(i, j) = {tx, ty + d.length(i, j), hex && d.flag(i, j)};
    }
  }
  for (int i = 1; i <= k; ++i) {
    const Outputs o = cap_outputs(cap(i, 1));
    if (o.left_x < 0 || o.left_x + o.left_y != one_position(b.left, i)) fail("left boundary");
    out.left(o.left_x, o.left_y, o.left_x);
  }
  for (int j = 1; j <= k; ++j) {
    const Outputs o = cap_outputs(cap(k, j));
    const int len = b.n - 1 - o.right_y - o.right_x;
    if (len < 0 || b.n - 1 - o.right_y != one_position(b.right, j)) fail("right boundary");
    out.right(o.right_x, o.right_y, len);
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= i; ++j) out.cap(cap(i, j));
  }
  Puzzle p{d.mode, b, out.finish()};
  if (auto err = check_puzzle(p)) throw InvalidTableauError("assembled puzzle is invalid: " + *err);
  return p;
}

Tableau skew_tableau_from_beams(const BeamDecomposition& d, const Partition& lambda, const Partition& nu) {
  require_beam_mode(d.mode);
  check_square(d);
  const bool hex = d.mode == Mode::Hex;
  std::map<Cell, std::vector<int>> boxes;
  std::vector<int> inner = lambda.parts();
  inner.resize(static_cast<std::size_t>(std::max(d.k, lambda.length())), 0);
  for (int i = 1; i <= d.k; ++i) {
    int col = lambda.row(i) + 1;
    std::vector<Cell> pending;
    for (int j = 1; j <= i; ++j) {
      if (hex && d.flag(i, j)) {
        const Cell prev{i, col - 1};
        if (prev.col < 1) throw StructureError("flagged beam (" + std::to_string(i) + "," + std::to_string(j) + ") has no box before it");
        if (prev.col <= lambda.row(i)) {
          if (lambda.row(i + 1) >= lambda.row(i)) throw StructureError("flag lands on a box of lambda that is not a corner");
          inner[static_cast<std::size_t>(i - 1)] = lambda.row(i) - 1;
        }
        boxes[prev].push_back(j);
      }
      for (int t = 0; t < d.length(i, j); ++t) boxes[{i, col++}].push_back(j);
      if (!hex && d.flag(i, j)) {
        if (col > nu.row(i)) {
          throw StructureError("flag of beam (" + std::to_string(i) + "," + std::to_string(j) + ") falls outside nu");
        }
        boxes[{i, col}].push_back(j);
        pending.push_back({i, col});
      }
    }
    if (col - 1 != nu.row(i)) throw StructureError("row " + std::to_string(i) + " does not end at nu");
    for (const Cell& c : pending) {
      if (boxes[c].size() < 2) throw StructureError("flag box in row " + std::to_string(i) + " has no own entry");
    }
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  const SkewShape shape(nu, Partition(inner));
  std::vector<Entry> entries;
  for (const Cell& c : shape.cells()) {
    auto it = boxes.find(c);
    if (it == boxes.end()) throw StructureError("box (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") left empty");
    entries.push_back(Entry::set(it->second));
  }
  if (entries.size() != boxes.size()) throw StructureError("entries outside the skew shape");
  return Tableau(shape, TableauKind::SetValued, std::move(entries));
}

Tableau oplus_tableau_from_beams(const BeamDecomposition& d, const Partition& lambda, const Partition& mu) {
  require_beam_mode(d.mode);
  check_square(d);
  const bool hex = d.mode == Mode::Hex;
  std::vector<Entry> entries;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int c = 0; c < lambda.row(i); ++c) entries.push_back(Entry::number(i));
  }
  for (int j = 1; j <= d.k; ++j) {
    int width = 0;
    for (int i = j; i <= d.k; ++i) {
      if (!hex && d.flag(i, j)) entries.push_back(Entry::circled(i));
      for (int t = 0; t < d.length(i, j); ++t) entries.push_back(Entry::number(i));
      if (hex && d.flag(i, j)) entries.push_back(Entry::circled(i));
      width += d.primed(i, j);
    }
    if (width != mu.row(j)) throw StructureError("row " + std::to_string(j) + " of mu does not match the beams");
  }
  return Tableau(OplusShape{lambda, mu}, hex ? TableauKind::CircleRight : TableauKind::CircleLeft, std::move(entries));
}

BeamDecomposition beams_from_skew_tableau(const Tableau& t, const Partition& lambda, int k, Mode mode) {
  require_beam_mode(mode);
  if (t.shape_kind() != ShapeKind::Skew || t.kind() != TableauKind::SetValued) {
    throw InvalidTableauError("expected a set-valued skew tableau");
  }
  const bool hex = mode == Mode::Hex;
  BeamDecomposition d(mode, k);
  d.lambda_gaps = gaps(lambda, k);
  d.nu_gaps = gaps(t.skew().outer, k);
  for (std::size_t n = 0; n < t.size(); ++n) {
    const Cell c = t.cells()[n];
    const std::vector<int>& vs = t.entries()[n].values;
    if (c.row > k) throw InvalidTableauError("tableau has more than k rows");
    const bool gray = c.col <= lambda.row(c.row);
    const int own = gray ? 0 : (hex ? vs.front() : vs.back());
    for (int v : vs) {
      if (v < 1 || v > c.row) throw InvalidTableauError("value " + std::to_string(v) + " in row " + std::to_string(c.row));
      if (v == own) {
        ++d.lengths[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(v - 1)];
        continue;
      }
      auto f = d.flags[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(v - 1)];
      if (f) throw InvalidTableauError("two extra entries for beam (" + std::to_string(c.row) + "," + std::to_string(v) + ")");
      f = true;
    }
  }
  // The reading above ignores where extra entries sit; the fill plan decides.
  Tableau again;
  try {
    again = skew_tableau_from_beams(d, lambda, t.skew().outer);
  } catch (const StructureError& e) {
    throw InvalidTableauError(std::string("tableau is not a fill plan: ") + e.what());
  }
  if (!(again == t)) throw InvalidTableauError("tableau is not a fill plan");
  return d;
}

BeamDecomposition beams_from_oplus_tableau(const Tableau& t, int k, Mode mode) {
  require_beam_mode(mode);
  const bool hex = mode == Mode::Hex;
  if (t.shape_kind() != ShapeKind::Oplus || t.kind() != (hex ? TableauKind::CircleRight : TableauKind::CircleLeft)) {
    throw InvalidTableauError(hex ? "expected a right circle oplus tableau" : "expected a left circle oplus tableau");
  }
  const OplusShape& shape = t.oplus();
  if (shape.top.length() > k || shape.bottom.length() > k) throw InvalidTableauError("tableau has more than k rows");
  BeamDecomposition d(mode, k);
  d.lambda_gaps = gaps(shape.top, k);
  const int first = shape.bottom_first_row();
  for (std::size_t n = 0; n < t.size(); ++n) {
    const int row = t.cells()[n].row;
    if (row < first) continue;
    const int j = row - first + 1;
    const Entry& e = t.entries()[n];
    if (e.value() < j || e.value() > k) throw InvalidTableauError("value " + std::to_string(e.value()) + " in row " + std::to_string(j));
    const auto ii = static_cast<std::size_t>(e.value() - 1);
    const auto jj = static_cast<std::size_t>(j - 1);
    if (e.is_circled()) {
      if (d.flags[ii][jj]) throw InvalidTableauError("two circled " + std::to_string(e.value()) + " in one row");
      d.flags[ii][jj] = true;
    } else {
      ++d.lengths[ii][jj];
    }
  }
  std::vector<int> nu(static_cast<std::size_t>(k), 0);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= i; ++j) nu[static_cast<std::size_t>(i - 1)] += d.length(i, j);
    nu[static_cast<std::size_t>(i - 1)] += shape.top.row(i);
  }
  try {
    d.nu_gaps = gaps(Partition(nu), k);
    if (!(oplus_tableau_from_beams(d, shape.top, shape.bottom) == t)) throw InvalidTableauError("tableau is not a fill plan");
  } catch (const StructureError& e) {
    throw InvalidTableauError(std::string("tableau is not a fill plan: ") + e.what());
  } catch (const ShapeError& e) {
    throw InvalidTableauError(std::string("tableau is not a fill plan: ") + e.what());
  }
  return d;
}

Tableau puzzle_to_skew_tableau(const Puzzle& p) {
  return skew_tableau_from_beams(decompose(p), lambda_of(p.boundary), nu_of(p.boundary));
}

Tableau puzzle_to_oplus_tableau(const Puzzle& p) {
  return oplus_tableau_from_beams(decompose(p), lambda_of(p.boundary), mu_of(p.boundary));
}

Puzzle skew_tableau_to_puzzle(const Tableau& t, const Partition& lambda, const AmbientRectangle& amb, Mode mode) {
  const BeamDecomposition d = beams_from_skew_tableau(t, lambda, amb.k, mode);
  Boundary b;
  try {
    b = build_boundary(lambda, Partition(content(t)), t.skew().outer, amb, mode);
  } catch (const Error& e) {
    throw InvalidTableauError(std::string("tableau does not fit the ambient rectangle: ") + e.what());
  }
  Puzzle p = assemble(d, b);
  if (!(puzzle_to_skew_tableau(p) == t)) throw InvalidTableauError("assembled puzzle reads back differently");
  return p;
}

Puzzle oplus_tableau_to_puzzle(const Tableau& t, const AmbientRectangle& amb, Mode mode) {
  const BeamDecomposition d = beams_from_oplus_tableau(t, amb.k, mode);
  Boundary b;
  try {
    b = build_boundary(t.oplus().top, t.oplus().bottom, Partition(content(t)), amb, mode);
  } catch (const Error& e) {
    throw InvalidTableauError(std::string("tableau does not fit the ambient rectangle: ") + e.what());
  }
  Puzzle p = assemble(d, b);
  if (!(puzzle_to_oplus_tableau(p) == t)) throw InvalidTableauError("assembled puzzle reads back differently");
  return p;
}

}  // namespace lrk
