#include <catch2/catch_amalgamated.hpp>

#include "hoco/matfp.hpp"

using namespace hoco;
using matfp::MatFp;

TEST_CASE("diagrammatic composition multiplies in reverse order") {
  matfp::MatCat cat{5};
  MatFp a = matfp::mat(5, {{2, 0}, {1, 1}, {0, 3}});  // 2 -> 3
  MatFp b = matfp::mat(5, {{1, 2, 0}});               // 3 -> 1
  MatFp ab = cat.compose(a, b);
  CHECK(ab == matfp::mul(b, a));
  CHECK(cat.dom(ab) == 2);
  CHECK(cat.cod(ab) == 1);
}

TEST_CASE("kernel basis is the canonical free-column form") {
  CHECK(matfp::kernel_basis(matfp::mat(2, {{1, 0}})) == matfp::mat(2, {{0}, {1}}));
  CHECK(matfp::kernel_basis(matfp::mat_identity(2, 2)).cols == 0);
  CHECK(matfp::kernel_basis(matfp::zeros(2, 1, 2)) == matfp::mat_identity(2, 2));

  MatFp m = matfp::mat(3, {{1, 2, 1}, {2, 4, 2}});
  MatFp k = matfp::kernel_basis(m);
  REQUIRE(k.cols == 2);
  CHECK(matfp::mul(m, k) == matfp::zeros(3, 2, 2));
  // Free coordinates carry unit entries in index order.
  CHECK(k.at(1, 0) == 1);
  CHECK(k.at(2, 0) == 0);
  CHECK(k.at(1, 1) == 0);
  CHECK(k.at(2, 1) == 1);
}

TEST_CASE("unique solvers invert consistent full-rank systems") {
  MatFp a = matfp::mat(3, {{1, 1}, {0, 1}, {2, 0}});
  MatFp x = matfp::mat(3, {{2, 1}, {1, 0}});
  CHECK(matfp::solve_unique(a, matfp::mul(a, x)) == x);
  MatFp r = matfp::mat(3, {{1, 0, 2}, {0, 1, 1}});  // full row rank
  MatFp y = matfp::mat(3, {{1, 2}, {0, 1}, {2, 2}});
  CHECK(matfp::solve_unique_right(r, matfp::mul(y, r)) == y);
  CHECK_THROWS_AS(matfp::solve_unique(matfp::zeros(3, 2, 1), matfp::mat(3, {{1}, {0}})), Error);
}

TEST_CASE("affine systems enumerate full solution cosets") {
  // X: 1x2 over F_2 with X * [1,1]^T = [0]: solutions {(0,0),(1,1)}.
  matfp::LinearSystem sys(2, 1, 2);
  sys.add(matfp::mat_identity(2, 1), matfp::mat(2, {{1}, {1}}), matfp::zeros(2, 1, 1));
  auto sols = sys.enumerate();
  REQUIRE(sols.size() == 2);
  CHECK(sols[0] == matfp::mat(2, {{0, 0}}));
  CHECK(sols[1] == matfp::mat(2, {{1, 1}}));

  // Inconsistent: 0 * X = 1.
  matfp::LinearSystem bad(2, 1, 1);
  bad.add(matfp::zeros(2, 1, 1), matfp::mat_identity(2, 1), matfp::mat(2, {{1}}));
  CHECK(bad.enumerate().empty());
}

TEST_CASE("matrix enumeration is lexicographic") {
  auto ms = matfp::enumerate_mats(2, 1, 2);
  REQUIRE(ms.size() == 4);
  CHECK(ms[0].e == std::vector<unsigned>{0, 0});
  CHECK(ms[1].e == std::vector<unsigned>{0, 1});
  CHECK(ms[2].e == std::vector<unsigned>{1, 0});
  CHECK(ms[3].e == std::vector<unsigned>{1, 1});
  CHECK(matfp::enumerate_mats(3, 0, 2).size() == 1);
}

TEST_CASE("pushouts of matrices satisfy the universal property on small dims") {
  for (unsigned p : {2u, 3u}) {
    matfp::MatCat cat{p};
    std::size_t bound = p == 2 ? 2 : 1;
    for (std::size_t a = 0; a <= bound; ++a)
      for (std::size_t b = 0; b <= bound; ++b)
        for (std::size_t c = 0; c <= bound; ++c)
          for (const auto& f : cat.hom(a, b))
            for (const auto& g : cat.hom(a, c)) {
              auto po = cat.pushout(f, g);
              REQUIRE(cat.eq(cat.compose(f, po.leg_b), cat.compose(g, po.leg_c)));
              for (std::size_t d = 0; d <= bound; ++d) {
                auto us = cat.hom(po.apex, d);
                for (const auto& x : cat.hom(b, d))
                  for (const auto& y : cat.hom(c, d)) {
                    if (!cat.eq(cat.compose(f, x), cat.compose(g, y))) continue;
                    auto u = cat.copair(po, x, y);
                    std::size_t matches = 0;
                    for (const auto& cand : us)
                      if (cat.eq(cat.compose(po.leg_b, cand), x) &&
                          cat.eq(cat.compose(po.leg_c, cand), y)) {
                        ++matches;
                        REQUIRE(cand == u);
                      }
                    REQUIRE(matches == 1);
                  }
              }
            }
  }
}

TEST_CASE("pushout of identities is the identity cocone") {
  for (unsigned p : {2u, 3u, 5u}) {
    matfp::MatCat cat{p};
    auto po = cat.pushout(cat.identity(2), cat.identity(2));
    CHECK(po.apex == 2);
    CHECK(po.leg_b == cat.identity(2));
    CHECK(po.leg_c == cat.identity(2));
  }
}

TEST_CASE("degenerate shapes are first-class") {
  matfp::MatCat cat{2};
  CHECK(cat.initial_arrow(3).cols == 0);
  CHECK(cat.terminal_arrow(3).rows == 0);
  CHECK(matfp::mul(cat.terminal_arrow(3), cat.initial_arrow(3)) == matfp::zeros(2, 0, 0));
  // Composite through the zero object is the zero map.
  MatFp through_zero = cat.compose(cat.terminal_arrow(2), cat.initial_arrow(3));
  CHECK(through_zero == matfp::zeros(2, 3, 2));
}
