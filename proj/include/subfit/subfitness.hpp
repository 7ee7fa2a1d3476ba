#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "subfit/semilattice.hpp"

namespace subfit {

/// A bounded join-semilattice is join-subfit when distinct elements have
/// distinct co-annihilators {c : a v c = top}. Throws MissingTop.
bool is_join_subfit(const FiniteJoinSemilattice& a);

/// Order-dual predicate. Throws MissingBottom.
bool is_meet_subfit(const FiniteLattice& l);

/// Meet-side predicate for any poset whose binary meets are all present
/// (InvalidInput otherwise, MissingBottom without a least element).
bool is_meet_subfit(const FinitePoset& p);

/// A separating element c for the pair (u, v): u v c reaches the top while
/// v v c stays below it.
struct SubfitWitness {
  int u;
  int v;
  int c;
};

/// First (ascending index) z with u v z = top and v v z < top, if any.
/// Requires u not<= v (NotComparable) and a top (MissingTop).
std::optional<SubfitWitness> join_subfit_witness(const FiniteJoinSemilattice& a, int u, int v);

/// The set S of elements whose principal downset is join-subfit, plus the
/// downset/ideal flags; offending_pair is the first join escaping S when S
/// is a downset but not an ideal.
struct SubfitElementReport {
  Mask subfit_set = 0;
  bool is_downset = false;
  bool is_ideal = false;
  std::optional<std::pair<int, int>> offending_pair;
};
SubfitElementReport subfit_elements(const FiniteJoinSemilattice& a);

/// Constructive witness that the join of two subfit elements stays subfit:
/// on a bounded distributive lattice with a v b = top and both principal
/// downsets subfit, produces z with s v z < top and t v z = top for any
/// t not<= s.
///
/// Control flow: pick the side (b first, else swap) where the meets with t
/// and s stay incomparable, pull a witness y out of that principal
/// downset, and either return y v a directly or correct once more inside
/// the other downset (z = w v x with w = (b ^ s) v y).
struct SubfitJoinWitness {
  int z;
  bool composite;  // true when the corrected branch z = w v x was taken
};
SubfitJoinWitness subfit_join_witness(const FiniteLattice& l, int a, int b, int s, int t);

/// Whether the subfit elements of a bounded distributive lattice form an
/// ideal (they always do; the sweep asserts it). Throws NotDistributive.
bool verify_subfit_ideal(const FiniteLattice& l);

/// All ideals (nonempty join-closed downsets), ascending mask order.
std::vector<Mask> ideals_of(const FiniteJoinSemilattice& a);

/// For every u not<= v some ideal W has (down u) v W = A and
/// (down v) v W != A in the ideal lattice; ideals enumerated explicitly.
bool is_ideally_subfit(const FiniteJoinSemilattice& a);

}  // namespace subfit
