#include <doctest.h>

#include <set>

#include "lrk/bijection.hpp"
#include "lrk/error.hpp"

using namespace lrk;

namespace {

Entry s(std::vector<int> vs) { return Entry::set(std::move(vs)); }
Entry n(int v) { return Entry::number(v); }
Entry c(int v) { return Entry::circled(v); }

void set_beam(BeamDecomposition& d, int i, int j, int len, bool flag = false) {
  d.lengths[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = len;
  d.flags[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = flag;
}

// The k=4 worked example; beam letters u; t,s; r,q,p; o,n,m,h.
BeamDecomposition k4_example() {
  BeamDecomposition d(Mode::Hex, 4);
  set_beam(d, 1, 1, 4);        // u
  set_beam(d, 2, 1, 2, true);  // t
  set_beam(d, 2, 2, 3, true);  // s
  set_beam(d, 3, 1, 2);        // r
  set_beam(d, 3, 2, 2, true);  // q
  set_beam(d, 3, 3, 2);        // p
  set_beam(d, 4, 1, 2);        // o
  set_beam(d, 4, 2, 1);        // n
  set_beam(d, 4, 3, 5);        // m
  set_beam(d, 4, 4, 1);        // h
  d.lambda_gaps = {3, 3, 4, 1};
  d.nu_gaps = {2, 2, 1, 10};
  return d;
}

const Partition kLambda{11, 8, 5, 1};
const Partition kMu{11, 8, 7, 1};
const Partition kNu{15, 13, 11, 10};

std::vector<Entry> repeat(int v, int times) { return std::vector<Entry>(static_cast<std::size_t>(times), n(v)); }

void append(std::vector<Entry>& out, const std::vector<Entry>& more) { out.insert(out.end(), more.begin(), more.end()); }

// Checks the inequalities a hex beam decomposition must satisfy.
void check_invariants(const BeamDecomposition& d, const Partition& l, const Partition& m, const Partition& nu) {
  const int k = d.k;
  for (int i = 1; i <= k; ++i) {
    int row = 0;
    for (int j = 1; j <= i; ++j) row += d.length(i, j);
    CHECK(nu.row(i) - l.row(i) == row);
  }
  for (int j = 1; j <= k; ++j) {
    int col = 0;
    for (int i = j; i <= k; ++i) col += d.primed(i, j);
    CHECK(m.row(j) == col);
  }
  CHECK(d.flag_count() == l.size() + m.size() - nu.size());
  // Ballot chains: partial anti-diagonal sums decrease down the diagonal.
  for (int depth = 0; depth < k; ++depth) {
    for (int j = 1; j + depth + 1 <= k; ++j) {
      int here = 0;
      int next = 0;
      for (int t = 0; t <= depth; ++t) {
        here += d.primed(j + t, j);
        next += d.primed(j + 1 + t, j + 1);
      }
      if (j + 1 + depth <= k) CHECK(here >= next);
    }
  }
  // Column strictness between rows i and i+1, sharpened by flags.
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= i; ++j) {
      int left = l.row(i);
      for (int t = 1; t < j; ++t) left += d.length(i, t);
      int below = l.row(i + 1);
      for (int t = 1; t <= j && i + 1 <= k; ++t) below += d.length(i + 1, t);
      CHECK(left >= below + (d.flag(i, j) ? 1 : 0));
    }
  }
}

}  // namespace

TEST_CASE("k=4 example: beams, tableaux and puzzle") {
  const BeamDecomposition d = k4_example();
  CHECK(d.flag_count() == 3);
  CHECK(d.primed(2, 1) == 3);

  const Tableau skew = skew_tableau_from_beams(d, kLambda, kNu);
  CHECK(skew.skew() == SkewShape(kNu, Partition{11, 7, 5, 1}));
  std::vector<Entry> e = repeat(1, 4);
  append(e, {s({1}), n(1), s({1, 2}), n(2), n(2), n(2)});
  append(e, {n(1), s({1, 2}), n(2), n(2), n(3), n(3)});
  append(e, {n(1), n(1), n(2), n(3), n(3), n(3), n(3), n(3), n(4)});
  for (Entry& x : e) x = Entry::set(x.values);
  CHECK(skew == Tableau(skew.skew(), TableauKind::SetValued, e));

  const Tableau oplus = oplus_tableau_from_beams(d, kLambda, kMu);
  std::vector<Entry> o;
  for (int i = 1; i <= 4; ++i) append(o, repeat(i, kLambda.row(i)));
  append(o, {n(1), n(1), n(1), n(1), n(2), n(2), c(2), n(3), n(3), n(4), n(4)});
  append(o, {n(2), n(2), n(2), c(2), n(3), n(3), c(3), n(4)});
  append(o, {n(3), n(3), n(4), n(4), n(4), n(4), n(4)});
  append(o, {n(4)});
  CHECK(oplus == Tableau(OplusShape{kLambda, kMu}, TableauKind::CircleRight, o));
  CHECK(satisfies_rule(RuleId::HexOplus, oplus, kLambda, kMu, kNu));
  CHECK(satisfies_rule(RuleId::HexSkew, skew, kLambda, kMu, kNu));

  const AmbientRectangle amb(20, 4);
  const Puzzle p = assemble(d, build_boundary(kLambda, kMu, kNu, amb, Mode::Hex));
  CHECK_FALSE(check_puzzle(p).has_value());
  CHECK(decompose(p) == d);
  CHECK(puzzle_to_skew_tableau(p) == skew);
  CHECK(puzzle_to_oplus_tableau(p) == oplus);
  CHECK(skew_tableau_to_puzzle(skew, kLambda, amb) == p);
  CHECK(oplus_tableau_to_puzzle(oplus, amb) == p);
  check_invariants(d, kLambda, kMu, kNu);
}

TEST_CASE("small example with a flag in an inner corner of lambda") {
  // Shape (4,3,1)/(1,1): the corner (1,2) of lambda carries the extra 1.
  const Tableau t(SkewShape({4, 3, 1}, {1, 1}), TableauKind::SetValued,
                  {s({1}), s({1}), s({1}), s({2}), s({2}), s({1})});
  const AmbientRectangle amb(8, 3);
  const Puzzle p = skew_tableau_to_puzzle(t, {2, 1}, amb);
  CHECK_FALSE(check_puzzle(p).has_value());
  int hexagons = 0;
  for (const Placement& pl : p.placements) hexagons += p.tiles().tiles[pl.tile].id == "hex";
  CHECK(hexagons == 1);
  const BeamDecomposition d = decompose(p);
  CHECK(d.flag(1, 1));
  CHECK(d.flag_count() == 1);
  CHECK(puzzle_to_skew_tableau(p) == t);
}

TEST_CASE("hexagon-free puzzles give classical tableaux") {
  const Boundary b = build_boundary({2, 1}, {3, 2}, {4, 3, 1}, {9, 3}, Mode::Hex);
  std::set<std::vector<std::vector<int>>> from_puzzles;
  for (const Puzzle& p : enumerate_tilings(b, catalog(Mode::Hex))) {
    const BeamDecomposition d = decompose(p);
    CHECK(d.flag_count() == 0);
    const Tableau t = puzzle_to_skew_tableau(p);
    std::vector<std::vector<int>> entries;
    for (const Entry& e : t.entries()) entries.push_back(e.values);
    from_puzzles.insert(entries);
  }
  std::set<std::vector<std::vector<int>>> classical;
  for (const Tableau& t : enumerate_tableaux(RuleId::LrSkew, {2, 1}, {3, 2}, {4, 3, 1})) {
    std::vector<std::vector<int>> entries;
    for (const Entry& e : t.entries()) entries.push_back(e.values);
    classical.insert(entries);
  }
  CHECK(from_puzzles.size() == 2);
  CHECK(from_puzzles == classical);
}

TEST_CASE("backward maps reject tableaux outside their image") {
  const AmbientRectangle amb(8, 3);
  // Content (1) in row 2 only: a 1 below nothing breaks the beam structure.
  const Tableau bad(SkewShape({1, 1}, {1}), TableauKind::SetValued, {s({2})});
  CHECK_THROWS_AS(skew_tableau_to_puzzle(bad, {1}, amb), InvalidTableauError);
  const Tableau wrong_kind(SkewShape({1}, {}), TableauKind::Plain, {n(1)});
  CHECK_THROWS_AS(skew_tableau_to_puzzle(wrong_kind, {}, amb), InvalidTableauError);
  const Tableau top_wrong(OplusShape{{1}, {1}}, TableauKind::CircleRight, {n(2), n(1)});
  CHECK_THROWS_AS(oplus_tableau_to_puzzle(top_wrong, amb), InvalidTableauError);
  const Puzzle k_puzzle = enumerate_tilings(build_boundary({1}, {1}, {2}, {3, 1}, Mode::K), catalog(Mode::K)).front();
  CHECK_THROWS_AS(decompose(k_puzzle), StructureError);
}

TEST_CASE("exhaustive roundtrips and invariants, k = 4 and k = 5") {
  for (const AmbientRectangle amb : {AmbientRectangle(7, 4), AmbientRectangle(7, 5)}) {
    const auto parts = partitions_in_box(amb.k, amb.n - amb.k - 1);
    for (const Partition& l : parts) {
      for (const Partition& m : parts) {
        for (const Partition& nu : parts) {
          const Boundary b = build_boundary(l, m, nu, amb, Mode::Hex);
          std::set<Tableau> skews;
          std::set<Tableau> opluses;
          for (const Puzzle& p : enumerate_tilings(b, catalog(Mode::Hex))) {
            const BeamDecomposition d = decompose(p);
            check_invariants(d, l, m, nu);
            CHECK(assemble(d, b) == p);
            const Tableau ts = puzzle_to_skew_tableau(p);
            const Tableau to = puzzle_to_oplus_tableau(p);
            CHECK(skew_tableau_to_puzzle(ts, l, amb) == p);
            CHECK(oplus_tableau_to_puzzle(to, amb) == p);
            skews.insert(ts);
            opluses.insert(to);
          }
          const auto hs = enumerate_tableaux(RuleId::HexSkew, l, m, nu);
          const auto ho = enumerate_tableaux(RuleId::HexOplus, l, m, nu);
          CHECK(skews == std::set<Tableau>(hs.begin(), hs.end()));
          CHECK(opluses == std::set<Tableau>(ho.begin(), ho.end()));
        }
      }
    }
  }
}

TEST_CASE("hexR beams: oplus is a bijection, skew is partial") {
  const AmbientRectangle amb(6, 3);
  const auto parts = partitions_in_box(2, 3);
  std::uint64_t undefined = 0;
  for (const Partition& l : parts) {
    for (const Partition& m : parts) {
      for (const Partition& nu : parts) {
        const Boundary b = build_boundary(l, m, nu, amb, Mode::HexR);
        const auto puzzles = enumerate_tilings(b, catalog(Mode::HexR));
        std::set<Tableau> opluses;
        std::set<Tableau> skews;
        for (const Puzzle& p : puzzles) {
          const Tableau to = puzzle_to_oplus_tableau(p);
          CHECK(oplus_tableau_to_puzzle(to, amb, Mode::HexR) == p);
          opluses.insert(to);
          try {
            const Tableau ts = puzzle_to_skew_tableau(p);
            CHECK(skew_tableau_to_puzzle(ts, l, amb, Mode::HexR) == p);
            skews.insert(ts);
          } catch (const StructureError&) {
            ++undefined;
          }
        }
        const auto ho = enumerate_tableaux(RuleId::HexROplus, l, m, nu);
        CHECK(opluses == std::set<Tableau>(ho.begin(), ho.end()));
        // The hexR skew rule counts exactly the puzzles whose extra entries
        // stay inside nu.
        const auto hs = enumerate_tableaux(RuleId::HexRSkew, l, m, nu);
        CHECK(skews == std::set<Tableau>(hs.begin(), hs.end()));
      }
    }
  }
  CHECK(undefined > 0);
}

TEST_CASE("hexR oplus through mirror and transpose") {
  const AmbientRectangle amb(6, 3);
  for (const Partition& l : partitions_in_box(2, 2)) {
    for (const Partition& m : partitions_in_box(2, 2)) {
      for (const Partition& nu : partitions_in_box(2, 2)) {
        const Boundary b = build_boundary(transpose(l), transpose(m), transpose(nu), amb, Mode::Hex);
        std::set<Tableau> images;
        for (const Puzzle& p : enumerate_tilings(b, catalog(Mode::Hex))) {
          const Puzzle q = mirror(p);
          CHECK(from_binary_string(q.boundary.left) == m);
          images.insert(puzzle_to_oplus_tableau(q));
        }
        // Mirroring swaps the roles of lambda and mu.
        const auto ho = enumerate_tableaux(RuleId::HexROplus, m, l, nu);
        CHECK(images == std::set<Tableau>(ho.begin(), ho.end()));
      }
    }
  }
}
