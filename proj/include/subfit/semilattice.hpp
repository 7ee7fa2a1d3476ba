#pragma once

#include <optional>
#include <vector>

#include "subfit/poset.hpp"

namespace subfit {

/// A join-semilattice over a finite poset: every pair has a least upper
/// bound, tabulated. Bottom/top are recorded when the poset has a unique
/// minimum/maximum.
struct FiniteJoinSemilattice {
  FinitePoset poset;
  std::vector<std::uint8_t> join;  // n*n, row-major
  std::optional<int> bottom;
  std::optional<int> top;

  int n() const { return poset.n; }
  bool le(int i, int j) const { return poset.le(i, j); }
  int join_of(int x, int y) const {
    return join[static_cast<size_t>(x) * static_cast<size_t>(poset.n) + static_cast<size_t>(y)];
  }
  bool bounded() const { return bottom.has_value() && top.has_value(); }
};

struct FiniteLattice {
  FiniteJoinSemilattice semilattice;
  std::vector<std::uint8_t> meet;  // n*n, row-major

  int n() const { return semilattice.n(); }
  bool le(int i, int j) const { return semilattice.le(i, j); }
  int join_of(int x, int y) const { return semilattice.join_of(x, y); }
  int meet_of(int x, int y) const {
    return meet[static_cast<size_t>(x) * static_cast<size_t>(n()) + static_cast<size_t>(y)];
  }
  int bottom() const { return *semilattice.bottom; }
  int top() const { return *semilattice.top; }
  const FinitePoset& poset() const { return semilattice.poset; }
};

/// Least upper bound of the elements of `s` in the order, if it exists.
std::optional<int> sup_of(const FinitePoset& p, Mask s);
/// Greatest lower bound of the elements of `s`, if it exists.
std::optional<int> inf_of(const FinitePoset& p, Mask s);

/// Present iff every pair has a least upper bound.
std::optional<FiniteJoinSemilattice> try_join_semilattice(const FinitePoset& p);

/// Present iff every pair has both a lub and a glb.
std::optional<FiniteLattice> try_lattice(const FinitePoset& p);

FiniteLattice dual_lattice(const FiniteLattice& l);

/// c <= a v b always decomposes as c = a' v b' with a' <= a, b' <= b.
bool is_distributive_join_semilattice(const FiniteJoinSemilattice& a);

/// The identity x ^ (y v z) == (x ^ y) v (x ^ z) on all triples.
bool is_distributive_lattice(const FiniteLattice& l);

/// Every element has a complement (x v y = top, x ^ y = bottom).
bool is_complemented(const FiniteLattice& l);

/// x != bottom and x = a v b forces x == a or x == b.
Mask join_irreducibles(const FiniteLattice& l);

/// The principal downset of `a` as a join-semilattice on compacted indices
/// (ascending original order, so witness search stays deterministic).
struct SubSemilattice {
  FiniteJoinSemilattice sl;
  std::vector<int> to_global;
  std::vector<int> to_local;
};
SubSemilattice restrict_to_principal_downset(const FiniteJoinSemilattice& a, int elem);

}  // namespace subfit
