#include <doctest.h>

#include "subfit/symbolic_space.hpp"

using namespace subfit;

namespace {

FinOrCofin fin(std::vector<std::uint32_t> v) { return FinOrCofin::finite(std::move(v)); }
FinOrCofin cof(std::vector<std::uint32_t> v) { return FinOrCofin::cofinite(std::move(v)); }

}  // namespace

TEST_CASE("compact-open membership") {
  CHECK(in_qcop(piece_v()));
  CHECK(in_qcop(piece_w()));
  CHECK(in_qcop(full_space()));
  CHECK(in_qcop({fin({4, 5}), 0}));
  CHECK_FALSE(in_qcop({cof({}), 0}));            // cofinite pure-sequence set
  CHECK_FALSE(in_qcop({cof({}), kPointY}));      // y without z is not open
  CHECK_FALSE(in_qcop({fin({4}), kPointX}));     // x needs a cofinite sequence part
  CHECK_FALSE(in_qcop({fin({4}), kPointZ}));
  CHECK_FALSE(in_qcop({fin({1}), 0}));           // supports live in N>=3
  CHECK(in_qcop_v(piece_v()));
  CHECK_FALSE(in_qcop_v(piece_w()));
  CHECK(in_qcop_w(piece_w()));
  CHECK_FALSE(in_qcop_w(full_space()));
}

TEST_CASE("intersections can escape, unions never do") {
  SymbolicOpen vz{cof({}), kPointZ};
  auto gone = inter_open(piece_v(), vz);
  CHECK_FALSE(gone.has_value());
  auto same = inter_open(piece_v(), piece_v());
  REQUIRE(same.has_value());
  CHECK(*same == piece_v());
  auto fin_pair = inter_open({fin({3, 4}), 0}, {fin({4, 7}), 0});
  REQUIRE(fin_pair.has_value());
  CHECK(fin_pair->p_part == fin({4}));
  CHECK(in_qcop(union_open(piece_v(), piece_w())));
  CHECK(union_open(piece_v(), piece_w()) == full_space());
}

TEST_CASE("the complement identification") {
  CHECK(antiiso(elem_a()) == piece_w());
  CHECK(antiiso(elem_c()) == piece_v());
  CHECK(antiiso(fin({})) == full_space());
  auto img = antiiso(cof({5, 9}));
  CHECK(img.p_part == fin({5, 9}));
  CHECK(img.extra == 0);
  CHECK_THROWS_AS(antiiso(fin({2})), Error);
  CHECK(antiiso_inv(antiiso(fin({1, 2, 6}))) == fin({1, 2, 6}));
  CHECK(antiiso_inv(piece_w()) == elem_a());
  CHECK(identification_is_unique());
}

TEST_CASE("antiiso sample checks") {
  auto rep = run_antiiso_checks(3000, 5);
  CHECK(rep.pass);
  auto un = run_union_closure_checks(3000, 5);
  CHECK(un.pass);
}

TEST_CASE("V-side witness") {
  CHECK(v_side_witness(fin({1, 2}), fin({1, 2, 7})) == fin({1, 2, 7}));
  CHECK(v_side_witness(fin({1, 2, 4}), cof({4})) == fin({1, 2, 3}));
  auto x = fin({1, 2, 5});
  auto y = fin({1, 2, 9});
  auto z = v_side_witness(x, y);
  CHECK(set_inter(x, z) == elem_c());
  CHECK(set_inter(y, z) != elem_c());
  CHECK_THROWS_AS(v_side_witness(fin({1, 2, 7}), fin({1, 2})), Error);
  CHECK_THROWS_AS(v_side_witness(fin({1}), fin({1, 2})), Error);
}

TEST_CASE("the opens of the symbolic space are not join-subfit") {
  auto rep = refute_space_subfit();
  CHECK(rep.diff_is_singleton_z);
  CHECK_FALSE(rep.z_is_closed_point);
  CHECK(rep.closed_point_free);
  CHECK(rep.transported_lhs == elem_b());
  CHECK(rep.transported_rhs == elem_c());
  CHECK(rep.transported_u == antiiso(elem_b()));
  CHECK(rep.transported_v == antiiso(elem_c()));
  CHECK(rep.transported_pair_incomparable);
  CHECK(rep.no_witness_exists);
  CHECK(rep.classes_checked == 6);
}

TEST_CASE("the two covering pieces carry join-subfit opens") {
  auto rep = check_cover_pieces(3000, 5);
  CHECK(rep.v_in_qcop);
  CHECK(rep.w_in_qcop);
  CHECK(rep.inter_escapes);
  CHECK(rep.w_side_pass);
  CHECK(rep.v_side_pass);
  CHECK(rep.counterexample.empty());
}
