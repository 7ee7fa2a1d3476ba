#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "subfit/enumerate.hpp"
#include "subfit/subfitness.hpp"

using namespace subfit;

namespace {

FiniteJoinSemilattice js(const FinitePoset& p) { return *try_join_semilattice(p); }

// in-test scan oracle for the directed witness
std::optional<int> witness_scan(const FiniteJoinSemilattice& a, int u, int v) {
  for (int z = 0; z < a.n(); ++z)
    if (a.join_of(u, z) == *a.top && a.join_of(v, z) != *a.top) return z;
  return std::nullopt;
}

}  // namespace

TEST_CASE("join-subfitness on the basic examples") {
  CHECK(is_join_subfit(js(fixtures::chain(2))));
  CHECK(is_join_subfit(js(fixtures::chain(1))));
  CHECK_FALSE(is_join_subfit(js(fixtures::chain(3))));
  CHECK(is_join_subfit(js(fixtures::boolean_cube(3))));
  CHECK_FALSE(is_join_subfit(js(fixtures::nonideal6())));
}

TEST_CASE("the failing pair of the six-element example shares its co-annihilator") {
  auto a = js(fixtures::nonideal6());
  auto ann = [&](int x) {
    Mask m = 0;
    for (int c = 0; c < a.n(); ++c)
      if (a.join_of(x, c) == *a.top) m |= bit(c);
    return m;
  };
  // s and t (indices 4 and 3) both answer exactly to {a, b, top}
  CHECK(ann(3) == ann(4));
  CHECK(ann(3) == (bit(1) | bit(2) | bit(5)));
}

TEST_CASE("missing top is reported") {
  auto a = js(fixtures::chain(2));
  a.top.reset();
  CHECK_THROWS_AS(is_join_subfit(a), Error);
  CHECK_THROWS_AS(join_subfit_witness(a, 1, 0), Error);
}

TEST_CASE("meet-subfitness") {
  CHECK(is_meet_subfit(fixtures::lat(fixtures::chain(2))));
  CHECK(is_meet_subfit(fixtures::lat(fixtures::boolean_cube(2))));
  CHECK_FALSE(is_meet_subfit(fixtures::lat(fixtures::chain(3))));
  // the five finite trace sets plus a truncation element, under inclusion:
  // {}, {0}, {1}, {0,1}, {1,2}, {0,1,2}
  auto p = poset_from_cover_pairs(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  CHECK_FALSE(is_meet_subfit(p));  // {1} and {1,2} share their annihilator
}

TEST_CASE("directed witness equals the scan oracle") {
  auto cube = js(fixtures::boolean_cube(2));
  auto w = join_subfit_witness(cube, 1, 2);
  REQUIRE(w.has_value());
  CHECK(w->c == *witness_scan(cube, 1, 2));
  CHECK(w->c == 2);  // the first z with p v z = top and q v z < top is q itself

  CHECK_FALSE(join_subfit_witness(js(fixtures::chain(3)), 1, 0).has_value());

  // on the 2-chain the ascending search finds the bottom, which already works
  auto two = js(fixtures::chain(2));
  auto w2 = join_subfit_witness(two, 1, 0);
  REQUIRE(w2.has_value());
  CHECK(w2->c == 0);

  CHECK_THROWS_AS(join_subfit_witness(two, 0, 1), Error);  // u <= v is misuse

  for (const auto& l : enumerate_lattices(5)) {
    for (int u = 0; u < l.n(); ++u)
      for (int v = 0; v < l.n(); ++v) {
        if (u == v || l.le(u, v)) continue;
        auto got = join_subfit_witness(l.semilattice, u, v);
        auto want = witness_scan(l.semilattice, u, v);
        CHECK(got.has_value() == want.has_value());
        if (got && want) CHECK(got->c == *want);
      }
  }
}

TEST_CASE("subfit element report on the six-element example") {
  auto rep = subfit_elements(js(fixtures::nonideal6()));
  CHECK(rep.subfit_set == (bit(0) | bit(1) | bit(2) | bit(3)));
  CHECK(rep.is_downset);
  CHECK_FALSE(rep.is_ideal);
  REQUIRE(rep.offending_pair.has_value());
  CHECK(rep.offending_pair->first == 1);
  CHECK(rep.offending_pair->second == 2);
}

TEST_CASE("subfit element report on chains and cubes") {
  auto rep3 = subfit_elements(js(fixtures::chain(3)));
  CHECK(rep3.subfit_set == (bit(0) | bit(1)));
  CHECK(rep3.is_ideal);
  CHECK_FALSE(rep3.offending_pair.has_value());

  auto cube = subfit_elements(js(fixtures::boolean_cube(3)));
  CHECK(cube.subfit_set == fixtures::boolean_cube(3).all());
  CHECK(cube.is_ideal);
}

TEST_CASE("subfit sets are downsets on every distributive join-semilattice") {
  for (const auto& l : enumerate_lattices(6)) {
    if (!is_distributive_join_semilattice(l.semilattice)) continue;
    CHECK(subfit_elements(l.semilattice).is_downset);
  }
}

TEST_CASE("composing witness: both branches on the four-element cube") {
  auto l = fixtures::lat(fixtures::boolean_cube(2));  // 0, p=1, q=2, top=3
  auto direct = subfit_join_witness(l, 1, 2, 1, 2);
  CHECK(direct.z == 1);
  CHECK_FALSE(direct.composite);
  // with a = top the first join s v y v a saturates, forcing the corrected path
  auto composite = subfit_join_witness(l, 3, 2, 1, 2);
  CHECK(composite.z == 1);
  CHECK(composite.composite);
}

TEST_CASE("composing witness: degenerate two-element run") {
  auto l = fixtures::lat(fixtures::chain(2));
  auto w = subfit_join_witness(l, 1, 0, 0, 1);
  CHECK(l.join_of(0, w.z) != l.top());
  CHECK(l.join_of(1, w.z) == l.top());
  CHECK(w.z == 0);
}

TEST_CASE("composing witness rejects bad inputs") {
  auto intro = fixtures::lat(fixtures::nonideal6());
  CHECK_THROWS_AS(subfit_join_witness(intro, 1, 2, 3, 4), Error);  // not distributive
  auto cube = fixtures::lat(fixtures::boolean_cube(2));
  CHECK_THROWS_AS(subfit_join_witness(cube, 1, 1, 1, 2), Error);  // a v b below top
  CHECK_THROWS_AS(subfit_join_witness(cube, 1, 2, 2, 2), Error);  // t <= s
  auto three = fixtures::lat(fixtures::chain(3));
  CHECK_THROWS_AS(subfit_join_witness(three, 2, 2, 0, 1), Error);  // down(top) not subfit
}

TEST_CASE("composing witness postconditions on all small distributive lattices") {
  for (const auto& l : enumerate_lattices(6)) {
    if (!is_distributive_lattice(l)) continue;
    int top = l.top();
    auto sub = [&](int e) {
      return is_join_subfit(restrict_to_principal_downset(l.semilattice, e).sl);
    };
    for (int a = 0; a < l.n(); ++a)
      for (int b = 0; b < l.n(); ++b) {
        if (l.join_of(a, b) != top || !sub(a) || !sub(b)) continue;
        for (int s = 0; s < l.n(); ++s)
          for (int t = 0; t < l.n(); ++t) {
            if (l.le(t, s)) continue;
            auto w = subfit_join_witness(l, a, b, s, t);
            CHECK(l.join_of(s, w.z) != top);
            CHECK(l.join_of(t, w.z) == top);
          }
      }
  }
}

TEST_CASE("ideal verification") {
  CHECK_THROWS_AS(verify_subfit_ideal(fixtures::lat(fixtures::nonideal6())), Error);
  CHECK(verify_subfit_ideal(fixtures::lat(fixtures::boolean_cube(3))));
  for (const auto& l : enumerate_lattices(6))
    if (is_distributive_lattice(l)) CHECK(verify_subfit_ideal(l));
}

TEST_CASE("ideals are enumerated explicitly") {
  auto ideals = ideals_of(js(fixtures::chain(3)));
  CHECK(ideals == std::vector<Mask>{0b001, 0b011, 0b111});
  // m3: principal downsets only (any two atoms join to the top)
  CHECK(ideals_of(js(fixtures::m3())).size() == 5);
}

TEST_CASE("ideal-based subfitness") {
  CHECK(is_ideally_subfit(js(fixtures::chain(2))));
  CHECK_FALSE(is_ideally_subfit(js(fixtures::chain(3))));
  for (const auto& l : enumerate_lattices(5))
    CHECK(is_ideally_subfit(l.semilattice) == is_join_subfit(l.semilattice));
}

TEST_CASE("separation form iff directed form on small lattices") {
  for (const auto& l : enumerate_lattices(5)) {
    bool separation = is_join_subfit(l.semilattice);
    bool directed = true;
    for (int u = 0; u < l.n() && directed; ++u)
      for (int v = 0; v < l.n(); ++v) {
        if (u == v || l.le(u, v)) continue;
        if (!join_subfit_witness(l.semilattice, u, v)) {
          directed = false;
          break;
        }
      }
    CHECK(separation == directed);
  }
}

TEST_CASE("for small distributive lattices subfit means complemented") {
  for (const auto& l : enumerate_lattices(6)) {
    if (!is_distributive_lattice(l)) continue;
    CHECK(is_join_subfit(l.semilattice) == is_complemented(l));
  }
}
