#include <doctest.h>

#include <algorithm>

#include "lrk/error.hpp"
#include "lrk/json.hpp"
#include "lrk/puzzles.hpp"
#include "lrk/tableaux.hpp"

using namespace lrk;

namespace {

std::uint64_t count(Mode mode, const Partition& l, const Partition& m, const Partition& nu, AmbientRectangle amb) {
  return count_tilings(build_boundary(l, m, nu, amb, mode), catalog(mode));
}

std::uint64_t count(Mode mode, const Partition& l, const Partition& m, const Partition& nu) {
  return count(mode, l, m, nu, minimal_ambient(mode, l, m, nu));
}

int tiles_with_id(const Puzzle& p, std::string_view id) {
  return static_cast<int>(std::count_if(p.placements.begin(), p.placements.end(),
                                        [&](const Placement& pl) { return p.tiles().tiles[pl.tile].id == id; }));
}

}  // namespace

TEST_CASE("catalogs load") {
  for (Mode m : all_modes()) {
    const Catalog& c = catalog(m);
    CHECK(c.mode == m);
    CHECK(c.tiles.size() >= 7);
    CHECK(parse_mode(mode_name(m)) == m);
  }
  CHECK(catalog(Mode::HexExtended).label_count == 3);
  CHECK_THROWS_AS(parse_mode("square"), RuleError);
  CHECK_THROWS_AS(parse_catalog(Mode::Classical, R"([{"id":"open","walk":[{"dir":0,"label":0}],"fill":"#fff","glyph":"o"}])"),
                  MalformedInputError);
  CHECK_THROWS_AS(parse_catalog(Mode::Classical, "not json"), MalformedInputError);
}

TEST_CASE("boundaries") {
  const Boundary b = build_boundary({2, 1}, {3, 2}, {4, 3, 1}, {9, 3});
  CHECK(b.bottom.bits() == "001010010");
  CHECK(b.left.bits() == "000010101");
  CHECK(b.right.bits() == "000101001");
  const Boundary e = build_boundary({}, {}, {}, {2, 0});
  CHECK(e.left.bits() == "00");
  CHECK(e.right.bits() == "00");
  CHECK(e.bottom.bits() == "00");
  CHECK_NOTHROW(build_boundary({2, 1}, {4, 2}, {4, 3, 1}, {8, 3}, Mode::Hex));
  CHECK_THROWS_AS(build_boundary({2, 1}, {5, 2}, {4, 3, 1}, {8, 3}, Mode::Hex), AmbientError);
  CHECK_THROWS_AS(build_boundary({2, 1}, {3, 2}, {4, 3, 1, 1}, {9, 3}), AmbientError);
  CHECK(minimal_ambient(Mode::Hex, {2, 1}, {4, 2}, {4, 3, 1}) == AmbientRectangle(8, 3));
  CHECK(minimal_ambient(Mode::Classical, {}, {}, {}) == AmbientRectangle(1, 0));
}

TEST_CASE("counts from worked examples") {
  CHECK(count(Mode::Classical, {2, 1}, {3, 2}, {4, 3, 1}, {9, 3}) == 2);
  CHECK(count(Mode::Classical, {}, {}, {}, {4, 0}) == 1);
  CHECK(count(Mode::K, {2, 1}, {2, 1}, {4, 2, 1}) == 3);
  // Frozen from the coproduct oracle.
  CHECK(count(Mode::Hex, {2, 1}, {4, 2}, {4, 3, 1}, {8, 3}) == 4);
}

TEST_CASE("puzzle counts equal tableau counts in a 2x2 box") {
  const std::vector<std::pair<Mode, RuleId>> pairs = {{Mode::Classical, RuleId::LrSkew},
                                                      {Mode::K, RuleId::KOplus},
                                                      {Mode::Tri, RuleId::TriOplus},
                                                      {Mode::Hex, RuleId::HexOplus},
                                                      {Mode::HexR, RuleId::HexROplus}};
  const auto parts = partitions_in_box(2, 2);
  for (const auto& [mode, rule] : pairs) {
    for (const Partition& l : parts) {
      for (const Partition& m : parts) {
        for (const Partition& nu : parts) {
          CAPTURE(mode_name(mode));
          CAPTURE(l.to_string());
          CAPTURE(m.to_string());
          CAPTURE(nu.to_string());
          CHECK(count(mode, l, m, nu) == count_tableaux(rule, l, m, nu));
        }
      }
    }
  }
}

TEST_CASE("counts are invariant under padding and vanish by degree") {
  const auto parts = partitions_in_box(2, 2);
  for (const Partition& l : parts) {
    for (const Partition& m : parts) {
      for (const Partition& nu : parts) {
        const int top = l.size() + m.size();
        for (Mode mode : {Mode::Classical, Mode::K, Mode::Hex, Mode::HexR}) {
          const AmbientRectangle amb = minimal_ambient(mode, l, m, nu);
          CHECK(count(mode, l, m, nu, amb) == count(mode, l, m, nu, {amb.n + 1, amb.k}));
          CHECK(count(mode, l, m, nu, amb) == count(mode, l, m, nu, {amb.n + 2, amb.k + 1}));
        }
        if (nu.size() != top) CHECK(count(Mode::Classical, l, m, nu) == 0);
        if (nu.size() > top) CHECK(count(Mode::Hex, l, m, nu) == 0);
        if (nu.size() < top) CHECK(count(Mode::K, l, m, nu) == 0);
      }
    }
  }
}

TEST_CASE("hexagon count equals the degree drop") {
  for (const Partition& l : partitions_in_box(2, 2)) {
    for (const Partition& m : partitions_in_box(2, 2)) {
      for (const Partition& nu : partitions_in_box(2, 2)) {
        const Boundary b = build_boundary(l, m, nu, minimal_ambient(Mode::Hex, l, m, nu), Mode::Hex);
        for (const Puzzle& p : enumerate_tilings(b, catalog(Mode::Hex))) {
          CHECK(tiles_with_id(p, "hex") == l.size() + m.size() - nu.size());
        }
      }
    }
  }
}

TEST_CASE("extended catalog matches hex one size up") {
  int compared = 0;
  for (const Partition& l : partitions_in_box(2, 3)) {
    for (const Partition& m : partitions_in_box(2, 3)) {
      for (const Partition& nu : partitions_in_box(2, 3)) {
        const AmbientRectangle amb(5, 2);
        CHECK(count(Mode::HexExtended, l, m, nu, amb) == count(Mode::Hex, l, m, nu, {6, 2}));
        ++compared;
      }
    }
  }
  CHECK(compared == 1000);
}

TEST_CASE("check_puzzle and edge labels") {
  const Boundary b = build_boundary({2, 1}, {3, 2}, {4, 3, 1}, {9, 3});
  const auto puzzles = enumerate_tilings(b, catalog(Mode::Classical));
  REQUIRE(puzzles.size() == 2);
  for (const Puzzle& p : puzzles) {
    CHECK_FALSE(check_puzzle(p).has_value());
    const EdgeLabels labels(p);
    for (int i = 0; i < 9; ++i) CHECK(labels.at({EdgeType::H, i, 0}) == b.bottom[i] - '0');
  }
  Puzzle broken = puzzles[0];
  broken.placements.pop_back();
  CHECK(check_puzzle(broken).has_value());
  Puzzle relabeled = puzzles[0];
  relabeled.boundary.bottom = BinaryString("000110010");
  CHECK(check_puzzle(relabeled).has_value());
}

TEST_CASE("mirror") {
  const Boundary b = build_boundary({2, 1}, {4, 2}, {4, 3, 1}, {8, 3}, Mode::Hex);
  for (const Puzzle& p : enumerate_tilings(b, catalog(Mode::Hex))) {
    const Puzzle q = mirror(p);
    CHECK(q.mode == Mode::HexR);
    CHECK_FALSE(check_puzzle(q).has_value());
    CHECK(from_binary_string(q.boundary.left) == transpose({4, 2}));
    CHECK(from_binary_string(q.boundary.right) == transpose({2, 1}));
    CHECK(from_binary_string(q.boundary.bottom) == transpose({4, 3, 1}));
    CHECK(mirror(q) == p);
  }
  const Boundary k = build_boundary({1}, {1}, {2}, {3, 1}, Mode::K);
  CHECK_THROWS_AS(mirror(enumerate_tilings(k, catalog(Mode::K)).front()), RuleError);
}

TEST_CASE("rendering") {
  const Boundary b = build_boundary({2, 1}, {3, 2}, {4, 3, 1}, {9, 3});
  const Puzzle p = enumerate_tilings(b, catalog(Mode::Classical)).front();
  const std::string svg = render(p, RenderFormat::Svg);
  std::size_t cells = 0;
  for (std::size_t at = svg.find("class=\"cell\""); at != std::string::npos; at = svg.find("class=\"cell\"", at + 1)) ++cells;
  CHECK(cells == 81);
  CHECK(render(p, RenderFormat::Tikz).find("\\begin{tikzpicture}") != std::string::npos);
  CHECK(render(p, RenderFormat::Ascii) == render(p, RenderFormat::Ascii));
  CHECK(puzzle_from_json(nlohmann::json::parse(render(p, RenderFormat::Json))) == p);
  const Puzzle empty = enumerate_tilings(build_boundary({}, {}, {}, {3, 0}), catalog(Mode::Classical)).front();
  const std::string text = render(empty, RenderFormat::Ascii);
  CHECK(text.find_first_not_of(". \n") == std::string::npos);
  CHECK_THROWS_AS(parse_render_format("png"), MalformedInputError);
}
