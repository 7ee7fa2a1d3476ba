#include <doctest.h>

#include "fixtures.hpp"
#include "subfit/enumerate.hpp"
#include "subfit/space.hpp"

using namespace subfit;

namespace {

FiniteSpace space(const FinitePoset& p) { return FiniteSpace{p}; }
FiniteSpace sierpinski() { return space(fixtures::chain(2)); }

}  // namespace

TEST_CASE("opens lattices of the basic spaces") {
  CHECK(qcop(space(fixtures::antichain(1))).lattice.n() == 2);
  CHECK(is_isomorphic(qcop(space(fixtures::antichain(2))).lattice.poset(),
                      fixtures::boolean_cube(2)));
  CHECK(is_isomorphic(qcop(sierpinski()).lattice.poset(), fixtures::chain(3)));
  for (const auto& p : enumerate_posets(4))
    CHECK(is_distributive_lattice(qcop(space(p)).lattice));
}

TEST_CASE("spaces from distributive lattices") {
  auto two_points = birkhoff_space(fixtures::lat(fixtures::boolean_cube(2)));
  CHECK(two_points.points() == 2);
  CHECK(is_isomorphic(two_points.spec, fixtures::antichain(2)));

  auto sier = birkhoff_space(fixtures::lat(fixtures::chain(3)));
  CHECK(is_isomorphic(sier.spec, fixtures::chain(2)));

  CHECK(birkhoff_space(fixtures::lat(fixtures::chain(2))).points() == 1);
  CHECK(birkhoff_space(fixtures::lat(fixtures::chain(1))).points() == 0);
  CHECK_THROWS_AS(birkhoff_space(fixtures::lat(fixtures::m3())), Error);
}

TEST_CASE("round trips on the small families") {
  for (const auto& l : enumerate_lattices(6)) {
    if (!is_distributive_lattice(l)) continue;
    CHECK(is_isomorphic(qcop(birkhoff_space(l)).lattice.poset(), l.poset()));
  }
  for (const auto& p : enumerate_posets(4)) {
    auto x = space(p);
    CHECK(is_isomorphic(birkhoff_space(qcop(x).lattice).spec, x.spec));
  }
}

TEST_CASE("closed points are the maximal points") {
  CHECK(closed_points(space(fixtures::antichain(3))) == fixtures::antichain(3).all());
  CHECK(closed_points(sierpinski()) == bit(1));
  auto vee = space(poset_from_cover_pairs(3, {{0, 1}, {0, 2}}));
  CHECK(closed_points(vee) == (bit(1) | bit(2)));
}

TEST_CASE("patch closure from the difference basis is discrete") {
  for (const auto& p : enumerate_posets(4)) {
    auto x = space(p);
    Mask universe = p.all();
    for (Mask s = 0;; ++s) {
      CHECK(patch_closure(x, s) == s);
      if (s == universe) break;
    }
  }
  auto x = space(fixtures::nonideal6());
  CHECK(patch_closure(x, 0) == 0);
  CHECK(patch_closure(x, x.spec.all()) == x.spec.all());
}

TEST_CASE("patch density criterion") {
  CHECK(check_patch_density_criterion(space(fixtures::antichain(3))));
  CHECK(check_patch_density_criterion(sierpinski()));
  CHECK(check_patch_density_criterion(space(fixtures::antichain(1))));
  // both sides of the criterion, evaluated separately on the Sierpinski space
  CHECK_FALSE(is_join_subfit(qcop(sierpinski()).lattice.semilattice));
  CHECK_FALSE(cp_patch_dense(sierpinski()));
}

TEST_CASE("inverse space") {
  auto anti = space(fixtures::antichain(3));
  CHECK(inverse_space(anti).spec == anti.spec);
  auto x = space(fixtures::nonideal6());
  CHECK(inverse_space(inverse_space(x)).spec == x.spec);
  for (const auto& p : enumerate_posets(4)) {
    auto q1 = qcop(space(dual(p))).lattice;
    auto q2 = dual_lattice(qcop(space(p)).lattice);
    CHECK(is_isomorphic(q1.poset(), q2.poset()));
  }
}

TEST_CASE("regular opens") {
  auto s = sierpinski();
  CHECK(is_regular_open(s, 0));
  CHECK(is_regular_open(s, s.spec.all()));
  CHECK_FALSE(is_regular_open(s, bit(0)));  // closure is everything, interior too
  CHECK_THROWS_AS(is_regular_open(s, bit(1)), Error);  // an upset, not open
  auto anti = space(fixtures::antichain(3));
  for (Mask u : downset_masks(anti.spec)) CHECK(is_regular_open(anti, u));
}

TEST_CASE("regular-open criterion") {
  CHECK(check_regular_open_criterion(space(fixtures::antichain(3))));
  CHECK(check_regular_open_criterion(sierpinski()));
  CHECK(check_regular_open_criterion(space(fixtures::antichain(1))));
  CHECK_FALSE(is_meet_subfit(qcop(sierpinski()).lattice));
}

TEST_CASE("density union implication") {
  auto anti = space(fixtures::antichain(2));
  Mask all = anti.spec.all();
  CHECK(check_density_union(anti, all, all));
  CHECK(check_density_union(sierpinski(), sierpinski().spec.all(), bit(0)));  // vacuous
  CHECK_THROWS_AS(check_density_union(sierpinski(), bit(1), 0), Error);
  for (const auto& p : enumerate_posets(4)) {
    auto x = space(p);
    for (Mask u : downset_masks(p))
      for (Mask v : downset_masks(p)) CHECK(check_density_union(x, u, v));
  }
}

TEST_CASE("relative patch interiors") {
  auto s = sierpinski();
  CHECK(check_relative_patch_interior(s, bit(0), bit(0)));
  CHECK(check_relative_patch_interior(s, 0, bit(0)));
  CHECK_THROWS_AS(check_relative_patch_interior(s, s.spec.all(), bit(0)), Error);
  for (const auto& p : enumerate_posets(3)) {
    auto x = space(p);
    for (Mask o1 : downset_masks(p))
      for (Mask o2 : downset_masks(p)) {
        if (o1 & ~o2) continue;
        CHECK(check_relative_patch_interior(x, o1, o2));
      }
  }
}

TEST_CASE("every nonempty closed set contains a closed point") {
  for (const auto& p : enumerate_posets(5)) {
    auto x = space(p);
    Mask cp = closed_points(x);
    Mask universe = p.all();
    for (Mask c = 1; c <= universe; ++c)
      if (is_upset(p, c)) CHECK((c & cp) != 0);
  }
}
