#include <doctest.h>

#include <limits>

#include "lrk/error.hpp"
#include "lrk/oracle.hpp"
#include "lrk/tableaux.hpp"

using namespace lrk;

namespace {

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("Grothendieck and Schur polynomials") {
  CHECK(grothendieck_poly({1}, 2, 2).to_string() == "x1 + x2 - x1*x2");
  CHECK(grothendieck_poly({}, 3, 4) == SparsePoly::constant(3, 4, 1));
  CHECK(grothendieck_poly({1, 1}, 2, 2).to_string() == "x1*x2");
  CHECK(schur_poly({1, 1}, 2).to_string() == "x1*x2");
  CHECK(schur_poly({2}, 2).to_string() == "x1^2 + x1*x2 + x2^2");
  CHECK(schur_poly({1, 1, 1}, 2).to_string() == "0");
  // The lowest degree part of G_lambda is s_lambda.
  for (const Partition& l : partitions_in_box(2, 2)) {
    const SparsePoly g = grothendieck_poly(l, 3, l.size());
    CHECK(g == schur_poly(l, 3));
    CHECK(grothendieck_poly(l, 3, 6).is_symmetric());
  }
}

TEST_CASE("polynomial arithmetic") {
  SparsePoly a(2, 3);
  a.add_term({1, 0}, 2);
  a.add_term({0, 0}, 1);
  SparsePoly b(2, 3);
  b.add_term({0, 1}, -1);
  CHECK((a + b).to_string() == "1 + 2*x1 - x2");
  CHECK((a - a).to_string() == "0");
  CHECK((a * b).to_string() == "-x2 - 2*x1*x2");
  CHECK(a.scaled(3).coefficient({1, 0}) == 6);
  SparsePoly big(1, 1);
  big.add_term({0}, std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + big, OverflowError);
  CHECK_FALSE(a.is_symmetric());
}

TEST_CASE("expansion in the G basis") {
  const SparsePoly g1 = grothendieck_poly({1}, 3, 3);
  const GExpansion e = expand_in_G_basis(g1 * g1, 3);
  CHECK(e.coefficients == std::map<Partition, std::int64_t>{{{2}, 1}, {{1, 1}, 1}, {{2, 1}, -1}});
  CHECK(e.reconstruct(3) == g1 * g1);
  for (const Partition& l : partitions_in_box(2, 2)) {
    const GExpansion basis = expand_in_G_basis(grothendieck_poly(l, 4, 4), 4);
    CHECK(basis.coefficients == std::map<Partition, std::int64_t>{{l, 1}});
  }
  // s_1 = G_1 + G_11 + G_111 + ... up to the cap.
  SparsePoly s1_poly(4, 4);
  const SparsePoly s1_low = schur_poly({1}, 4);
  for (const auto& [e, c] : s1_low.terms()) s1_poly.add_term(e, c);
  const GExpansion s1 = expand_in_G_basis(s1_poly, 4);
  CHECK(s1.coefficients == std::map<Partition, std::int64_t>{{{1}, 1}, {{1, 1}, 1}, {{1, 1, 1}, 1}, {{1, 1, 1, 1}, 1}});
  CHECK_THROWS_AS(expand_in_G_basis(g1, 4), ExpansionError);
  SparsePoly lopsided(3, 3);
  lopsided.add_term({1, 0, 0}, 1);
  CHECK_THROWS_AS(expand_in_G_basis(lopsided, 3), ExpansionError);
}

TEST_CASE("product constants") {
  CHECK(product_constants({2, 1}, {3, 2}, 8).at({4, 3, 1}) == 2);
  CHECK(product_constants({2, 1}, {2, 1}, 7).at({4, 2, 1}) == 3);
  CHECK(product_constants({2, 1}, {}, 6) == std::map<Partition, std::uint64_t>{{{2, 1}, 1}});
  CHECK(product_constants({2}, {1}, 2).empty());
  CHECK(script_g_constants({}, {}, 3).at({}) == 1);
}

TEST_CASE("product constants agree with full polynomial multiplication, signs included") {
  const int cap = 5;
  for (const Partition& l : partitions_in_box(2, 2)) {
    for (const Partition& m : partitions_in_box(2, 2)) {
      if (l.size() + m.size() > cap) continue;
      const GExpansion raw = expand_in_G_basis(grothendieck_poly(l, cap, cap) * grothendieck_poly(m, cap, cap), cap);
      const auto c = product_constants(l, m, cap);
      CHECK(raw.coefficients.size() == c.size());
      for (const auto& [nu, a] : raw.coefficients) {
        CAPTURE(nu.to_string());
        REQUIRE(c.contains(nu));
        CHECK(a == sign(nu.size() - l.size() - m.size()) * static_cast<std::int64_t>(c.at(nu)));
      }
    }
  }
}

TEST_CASE("oracles agree with tableau counts in a 2x2 box") {
  const auto parts = partitions_in_box(2, 2);
  for (const Partition& l : parts) {
    for (const Partition& m : parts) {
      const auto c = product_constants(l, m, 6);
      const auto cbar = script_g_constants(l, m, 6);
      for (const Partition& nu : parts) {
        CAPTURE(l.to_string());
        CAPTURE(m.to_string());
        CAPTURE(nu.to_string());
        CHECK((c.contains(nu) ? c.at(nu) : 0) == count_tableaux(RuleId::KOplus, l, m, nu));
        CHECK((cbar.contains(nu) ? cbar.at(nu) : 0) == count_tableaux(RuleId::TriOplus, l, m, nu));
        std::uint64_t identity = 0;
        for (const Partition& bigger : shape_variants_plus(m)) {
          const auto cb = product_constants(l, bigger, 6);
          identity += cb.contains(nu) ? cb.at(nu) : 0;
        }
        CHECK((cbar.contains(nu) ? cbar.at(nu) : 0) == identity);
        const auto d = coproduct_constants(nu);
        CHECK((d.contains({l, m}) ? d.at({l, m}) : 0) == count_tableaux(RuleId::HexOplus, l, m, nu));
      }
    }
  }
}

TEST_CASE("coproduct constants") {
  const auto d1 = coproduct_constants({1});
  using Key = std::pair<Partition, Partition>;
  CHECK(d1 == std::map<Key, std::uint64_t>{{{{}, {1}}, 1}, {{{1}, {}}, 1}, {{{1}, {1}}, 1}});
  CHECK(coproduct_constants({4, 3, 1}).at({{2, 1}, {3, 2}}) == 2);
  for (const auto& [key, value] : coproduct_constants({2, 1})) CHECK(key.first.size() + key.second.size() >= 3);
}
