#include <doctest.h>

#include <set>

#include "subfit/counterexample.hpp"

using namespace subfit;

namespace {

FinOrCofin fin(std::vector<std::uint32_t> v) { return FinOrCofin::finite(std::move(v)); }
FinOrCofin cof(std::vector<std::uint32_t> v) { return FinOrCofin::cofinite(std::move(v)); }

}  // namespace

TEST_CASE("family membership by trace class") {
  CHECK(in_family(fin({1, 2})));
  CHECK(family_class(fin({1, 2})) == TraceClass::one_two);
  CHECK_FALSE(in_family(fin({2})));
  CHECK_FALSE(in_family(fin({0, 2})));
  CHECK_FALSE(in_family(fin({0, 1, 2})));
  CHECK(in_family(cof({5})));  // cofinite, still contains 0, 1, 2
  CHECK_FALSE(in_family(cof({1})));
  CHECK(in_family(fin({})));
  CHECK(in_family(fin({7, 9})));
  CHECK(family_class(cof({})) == TraceClass::cofinite);
}

TEST_CASE("lattice closure adds exactly the full-trace finite sets") {
  CHECK(in_lattice_closure(fin({0, 1, 2})));
  CHECK(in_lattice_closure(fin({0, 1, 2, 9})));
  CHECK_FALSE(in_family(fin({0, 1, 2, 9})));
  CHECK(in_lattice_closure(fin({0})));
  CHECK_FALSE(in_lattice_closure(fin({0, 2})));
  // the join of a and c inside the powerset lands in the closure, not the family
  CHECK(set_union(elem_a(), elem_c()) == fin({0, 1, 2}));
}

TEST_CASE("meets stay in the family") {
  CHECK(family_meet(fin({0, 5}), fin({1, 5})) == fin({5}));
  CHECK(family_meet(elem_a(), elem_b()) == fin({}));
  CHECK(family_meet(cof({3}), cof({4})) == cof({3, 4}));
  CHECK_THROWS_AS(family_meet(fin({2}), elem_a()), Error);
}

TEST_CASE("witness above {0}") {
  CHECK(upset0_witness(fin({0}), fin({0, 5})) == fin({0, 5}));
  // the difference starts at 2, so the construction steps past it
  CHECK(upset0_witness(fin({0, 1}), cof({})) == fin({0, 3}));
  CHECK(upset0_witness(fin({0, 1, 4}), cof({})) == fin({0, 3}));
  CHECK_THROWS_AS(upset0_witness(fin({0, 5}), fin({0})), Error);     // y below x
  CHECK_THROWS_AS(upset0_witness(fin({1}), fin({0, 5})), Error);     // x misses 0
  auto x = fin({0, 4});
  auto y = cof({4});
  auto z = upset0_witness(x, y);
  CHECK(set_inter(x, z) == elem_a());
  CHECK(set_inter(y, z) != elem_a());
}

TEST_CASE("witness above {1}") {
  CHECK(upset1_witness(fin({1}), fin({1, 2})) == fin({1, 2}));
  CHECK(upset1_witness(fin({1, 4}), fin({1, 7})) == fin({1, 7}));
  CHECK(upset1_witness(fin({1, 4}), cof({})) == fin({0, 1}));  // least new element is 0
  CHECK_THROWS_AS(upset1_witness(fin({1}), fin({1})), Error);
}

TEST_CASE("the family is not meet-subfit: exact class analysis") {
  auto rep = meet_subfit_refutation();
  CHECK(rep.lhs == elem_b());
  CHECK(rep.rhs == elem_c());
  CHECK(rep.below_rhs == std::vector<FinOrCofin>{fin({}), elem_b(), elem_c()});
  CHECK(rep.classes_checked == kTraceClassCount);
  CHECK_FALSE(rep.witness_exists);
}

TEST_CASE("distributivity witness above {1}: plain union cases") {
  std::string tag;
  auto [x2, y2] = upset1_distrib_witness(fin({1, 5}), fin({1, 7}), cof({9}), &tag);
  CHECK(tag == "a");
  CHECK(x2 == set_union(fin({1, 5}), cof({9})));
  CHECK(set_inter(x2, y2) == cof({9}));

  auto [x3, y3] = upset1_distrib_witness(fin({1, 5}), fin({1, 7}), fin({1}), &tag);
  CHECK(tag == "a");
  CHECK(set_inter(x3, y3) == fin({1}));
}

TEST_CASE("distributivity witness above {1}: the cofinite correction") {
  auto x = fin({1, 2, 5});
  auto y = fin({1, 7});
  auto z = fin({0, 1});
  std::string tag;
  auto [x2, y2] = upset1_distrib_witness(x, y, z, &tag);
  CHECK(tag == "b-fix-left");
  CHECK(x2 == cof({7}));  // {0,1,2} u (N>=3 minus y) u x u z misses only 7
  CHECK(y2 == fin({0, 1, 7}));
  CHECK(subseteq(x, x2));
  CHECK(subseteq(y, y2));
  CHECK(set_inter(x2, y2) == z);

  // mirrored roles
  auto [x4, y4] = upset1_distrib_witness(y, x, z, &tag);
  CHECK(tag == "b-fix-right");
  CHECK(set_inter(x4, y4) == z);
}

TEST_CASE("family distributivity witness covers the four splits") {
  std::string tag;
  // plain tail set
  auto [x1, y1] = family_distrib_witness(fin({5}), fin({9}), fin({}), &tag);
  CHECK(tag == "i");
  CHECK(set_inter(x1, y1) == fin({}));
  // trace {0} against a {1,2}-side operand
  auto x = fin({1, 2});
  auto y = fin({4});
  auto z = fin({0});
  auto [x2, y2] = family_distrib_witness(x, y, z, &tag);
  CHECK(tag == "ii-fix-left");
  CHECK(subseteq(x, x2));
  CHECK(in_family(x2));
  CHECK(x2.is_cofinite());
  CHECK(set_inter(x2, y2) == z);
  // trace {0,1} case
  auto [x3, y3] = family_distrib_witness(fin({1, 2, 8}), fin({0, 1}), fin({0, 1}), &tag);
  CHECK(tag == "iii-fix-left");
  CHECK(set_inter(x3, y3) == fin({0, 1}));
  // trace {1,2} case with the clash on the other side
  auto [x4, y4] = family_distrib_witness(fin({9}), fin({0, 1, 5}), fin({1, 2, 9}), &tag);
  CHECK(tag == "iv-fix-right");
  CHECK(set_inter(x4, y4) == fin({1, 2, 9}));
  // preconditions
  CHECK_THROWS_AS(family_distrib_witness(fin({0}), fin({0}), fin({5}), &tag), Error);
  CHECK_THROWS_AS(family_distrib_witness(fin({2}), fin({}), fin({}), &tag), Error);
}

TEST_CASE("sampler is deterministic and covers all classes") {
  FamilySampler s1(30, 99), s2(30, 99);
  std::set<TraceClass> seen;
  for (int i = 0; i < 1000; ++i) {
    auto a = s1.sample(), b = s2.sample();
    CHECK(a == b);
    CHECK(in_family(a));
    seen.insert(*family_class(a));
  }
  CHECK(seen.size() == static_cast<size_t>(kTraceClassCount));
  CHECK_THROWS_AS(FamilySampler(2, 1), Error);
}

TEST_CASE("claim runs pass on seeded batches") {
  for (int c : {1, 2, 3, 4, 5, 6}) {
    auto out = run_claim(c, 2000, 7);
    CHECK(out.pass);
    CHECK(out.counterexample.empty());
  }
  CHECK(run_meet_closure(20000, 7).pass);
  CHECK_THROWS_AS(run_claim(9, 10, 1), Error);
}

TEST_CASE("claim case counters see every proof path") {
  auto c5 = run_claim(5, 4000, 3);
  long long a = 0, b = 0;
  for (auto& [k, v] : c5.case_counts) (k[0] == 'a' ? a : b) += v;
  CHECK(a > 0);
  CHECK(b > 0);
  auto c6 = run_claim(6, 6000, 3);
  std::set<std::string> prefixes;
  for (auto& [k, v] : c6.case_counts) prefixes.insert(k.substr(0, k.find('-')));
  CHECK(prefixes == std::set<std::string>{"i", "ii", "iii", "iv"});
}
