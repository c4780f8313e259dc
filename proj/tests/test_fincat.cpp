#include <catch2/catch_amalgamated.hpp>

#include "hoco/fincat.hpp"
#include "hoco/oracles.hpp"

using namespace hoco;
using fincat::FinSetMap;

TEST_CASE("composition follows the table-lookup rule") {
  FinSetMap swap2{2, 2, {1, 0}};
  CHECK(fincat::compose(swap2, swap2) == fincat::finset_id(2));

  FinSetMap f{1, 2, {0}};
  FinSetMap g{2, 1, {0, 0}};
  CHECK(fincat::compose(f, g) == FinSetMap{1, 1, {0}});

  FinSetMap empty3{0, 3, {}};
  FinSetMap collapse{3, 1, {0, 0, 0}};
  CHECK(fincat::compose(empty3, collapse) == FinSetMap{0, 1, {}});
}

TEST_CASE("composition rejects a codomain/domain mismatch naming both maps") {
  FinSetMap f{1, 2, {0}};
  FinSetMap g{3, 1, {0, 0, 0}};
  CHECK_THROWS_WITH(fincat::compose(f, g),
                    Catch::Matchers::ContainsSubstring("\"dom\":1") &&
                        Catch::Matchers::ContainsSubstring("\"dom\":3"));
}

TEST_CASE("map enumeration is lexicographic and handles empty objects") {
  CHECK(fincat::enumerate_maps(0, 5).size() == 1);
  CHECK(fincat::enumerate_maps(0, 5).front() == FinSetMap{0, 5, {}});
  CHECK(fincat::enumerate_maps(2, 0).empty());

  auto maps = fincat::enumerate_maps(2, 2);
  REQUIRE(maps.size() == 4);
  CHECK(maps[0].tab == std::vector<std::size_t>{0, 0});
  CHECK(maps[1].tab == std::vector<std::size_t>{0, 1});
  CHECK(maps[2].tab == std::vector<std::size_t>{1, 0});
  CHECK(maps[3].tab == std::vector<std::size_t>{1, 1});
}

TEST_CASE("pushout canonical labeling on small spans") {
  SECTION("identities") {
    auto po = fincat::pushout(fincat::finset_id(1), fincat::finset_id(1));
    CHECK(po.apex == 1);
    CHECK(po.leg_b.tab == std::vector<std::size_t>{0});
    CHECK(po.leg_c.tab == std::vector<std::size_t>{0});
  }
  SECTION("one identified pair") {
    auto po = fincat::pushout(FinSetMap{1, 2, {0}}, FinSetMap{1, 1, {0}});
    CHECK(po.apex == 2);
    CHECK(po.leg_b.tab == std::vector<std::size_t>{0, 1});
    CHECK(po.leg_c.tab == std::vector<std::size_t>{0});
  }
  SECTION("collapse along a surjection") {
    auto po = fincat::pushout(FinSetMap{2, 1, {0, 0}}, fincat::finset_id(2));
    CHECK(po.apex == 1);
    CHECK(po.leg_b.tab == std::vector<std::size_t>{0});
    CHECK(po.leg_c.tab == std::vector<std::size_t>{0, 0});
  }
}

TEST_CASE("copair solves per apex class and rejects non-commuting cocones") {
  auto po_id = fincat::pushout(fincat::finset_id(1), fincat::finset_id(1));
  CHECK(fincat::copair(po_id, fincat::finset_id(1), fincat::finset_id(1)) == fincat::finset_id(1));

  auto po = fincat::pushout(FinSetMap{1, 2, {0}}, FinSetMap{1, 1, {0}});
  FinSetMap x{2, 2, {0, 1}};
  FinSetMap y{1, 2, {0}};
  CHECK(fincat::copair(po, x, y) == FinSetMap{2, 2, {0, 1}});

  FinSetMap bad_y{1, 2, {1}};
  CHECK_THROWS_WITH(fincat::copair(po, x, bad_y),
                    Catch::Matchers::ContainsSubstring("does not commute"));
}

TEST_CASE("composition is associative and unital on a bounded corpus") {
  fincat::FinSetCat cat;
  std::size_t cases = 0;
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& f : fincat::enumerate_maps(a, b)) {
        CHECK(fincat::compose(fincat::finset_id(a), f) == f);
        CHECK(fincat::compose(f, fincat::finset_id(b)) == f);
        for (std::size_t c = 0; c <= 2; ++c)
          for (const auto& g : fincat::enumerate_maps(b, c))
            for (std::size_t d = 0; d <= 2; ++d)
              for (const auto& h : fincat::enumerate_maps(c, d)) {
                CHECK(fincat::compose(fincat::compose(f, g), h) ==
                      fincat::compose(f, fincat::compose(g, h)));
                ++cases;
              }
      }
  CHECK(cases > 1000);
}

TEST_CASE("pushout agrees with the naive-closure oracle on all spans up to size 3") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (std::size_t c = 0; c <= 3; ++c)
        for (const auto& f : fincat::enumerate_maps(a, b))
          for (const auto& g : fincat::enumerate_maps(a, c)) {
            auto fast = fincat::pushout(f, g);
            auto slow = oracles::pushout_by_closure(f, g);
            REQUIRE(fast.apex == slow.apex);
            REQUIRE(fast.leg_b == slow.leg_b);
            REQUIRE(fast.leg_c == slow.leg_c);
            // Square commutes and legs are jointly surjective.
            REQUIRE(fincat::compose(f, fast.leg_b) == fincat::compose(g, fast.leg_c));
            std::vector<bool> hit(fast.apex, false);
            for (std::size_t v : fast.leg_b.tab) hit[v] = true;
            for (std::size_t v : fast.leg_c.tab) hit[v] = true;
            for (bool h : hit) REQUIRE(h);
          }
}

TEST_CASE("copair is the unique mediating map on spans up to size 2") {
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (std::size_t c = 0; c <= 2; ++c)
        for (const auto& f : fincat::enumerate_maps(a, b))
          for (const auto& g : fincat::enumerate_maps(a, c)) {
            auto po = fincat::pushout(f, g);
            for (std::size_t d = 0; d <= 2; ++d) {
              auto us = fincat::enumerate_maps(po.apex, d);
              for (const auto& x : fincat::enumerate_maps(b, d))
                for (const auto& y : fincat::enumerate_maps(c, d)) {
                  if (fincat::compose(f, x) != fincat::compose(g, y)) continue;
                  auto u = fincat::copair(po, x, y);
                  std::size_t matches = 0;
                  for (const auto& cand : us)
                    if (fincat::compose(po.leg_b, cand) == x &&
                        fincat::compose(po.leg_c, cand) == y) {
                      ++matches;
                      REQUIRE(cand == u);
                    }
                  REQUIRE(matches == 1);
                }
            }
          }
}
