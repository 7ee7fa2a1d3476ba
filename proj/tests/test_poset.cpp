#include <doctest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "subfit/enumerate.hpp"

using namespace subfit;

TEST_CASE("cover closure matches the matrix oracle on the six-element example") {
  std::vector<std::pair<int, int>> covers = {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {1, 5}, {2, 5}, {4, 5}};
  auto p = poset_from_cover_pairs(6, covers);
  auto m = oracles::closure_matrix(6, covers);
  int count = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      CHECK(p.le(i, j) == m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      if (p.le(i, j)) ++count;
    }
  CHECK(count == 16);
}

TEST_CASE("cover closure matches the oracle on random acyclic relations") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) covers.emplace_back(i, j);
    auto p = poset_from_cover_pairs(n, covers);
    auto m = oracles::closure_matrix(n, covers);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(p.le(i, j) == m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
}

TEST_CASE("small posets") {
  auto single = poset_from_cover_pairs(1, {});
  CHECK(single.le(0, 0));
  auto two = fixtures::chain(2);
  int entries = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) entries += two.le(i, j);
  CHECK(entries == 3);
}

TEST_CASE("cycles are rejected") {
  CHECK_THROWS_AS(poset_from_cover_pairs(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(poset_from_cover_pairs(3, {{0, 1}, {1, 2}, {2, 0}}), Error);
  CHECK_THROWS_AS(poset_from_cover_pairs(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(poset_from_cover_pairs(2, {{0, 5}}), Error);
  CHECK_THROWS_AS(poset_from_cover_pairs(0, {}), Error);
}

TEST_CASE("up-row validation") {
  CHECK_THROWS_AS(poset_from_up_rows(2, {0b11, 0b11}), Error);  // antisymmetry
  CHECK_THROWS_AS(poset_from_up_rows(2, {0b00, 0b10}), Error);  // reflexivity
  CHECK_THROWS_AS(poset_from_up_rows(3, {0b011, 0b110, 0b100}), Error);  // transitivity
  auto chain = poset_from_up_rows(2, {0b11, 0b10});
  CHECK(chain.le(0, 1));
}

TEST_CASE("dual is an involution and flips covers") {
  for (const auto& p : enumerate_posets(5)) {
    CHECK(dual(dual(p)) == p);
    auto cp = cover_pairs(p);
    auto cd = cover_pairs(dual(p));
    CHECK(cp.size() == cd.size());
  }
  CHECK(dual(fixtures::antichain(3)) == fixtures::antichain(3));
}

TEST_CASE("cover pairs recover the generating covers") {
  auto p = fixtures::boolean_cube(2);
  auto cp = cover_pairs(p);
  CHECK(cp == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(cover_pairs(fixtures::chain(4)).size() == 3);
}

TEST_CASE("restriction keeps the induced order") {
  auto p = fixtures::nonideal6();
  auto r = restrict_poset(p, bit(0) | bit(3) | bit(4));  // 0 < t < s
  CHECK(r.poset.n == 3);
  CHECK(r.poset.le(0, 1));
  CHECK(r.poset.le(1, 2));
  CHECK(r.to_global == std::vector<int>{0, 3, 4});
  CHECK_THROWS_AS(restrict_poset(p, 0), Error);
}

TEST_CASE("downset enumeration") {
  CHECK(downset_masks(fixtures::chain(3)).size() == 4);
  CHECK(downset_masks(fixtures::antichain(4)).size() == 16);
  auto ds = downset_masks(fixtures::nonideal6());
  for (Mask m : ds) CHECK(is_downset(fixtures::nonideal6(), m));
}

TEST_CASE("isomorphism: positives and negatives") {
  auto p = fixtures::nonideal6();
  CHECK(is_isomorphic(p, p));
  CHECK_FALSE(is_isomorphic(fixtures::chain(2), fixtures::antichain(2)));
  CHECK_FALSE(is_isomorphic(fixtures::boolean_cube(2), fixtures::chain(4)));
  CHECK_FALSE(is_isomorphic(fixtures::m3(), fixtures::n5()));
  // this six-element lattice is self-dual (swap bottom/top and the chain)
  CHECK(is_isomorphic(p, dual(p)));
}

TEST_CASE("isomorphism is invariant under relabeling") {
  std::mt19937_64 rng(11);
  for (const auto& p : enumerate_posets(5)) {
    std::vector<int> perm(static_cast<size_t>(p.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto q = fixtures::relabel(p, perm);
    CHECK(is_isomorphic(p, q));
    auto map = find_isomorphism(p, q);
    REQUIRE(map.has_value());
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        CHECK(p.le(i, j) ==
              q.le((*map)[static_cast<size_t>(i)], (*map)[static_cast<size_t>(j)]));
  }
}
