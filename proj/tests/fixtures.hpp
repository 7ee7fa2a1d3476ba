#pragma once

#include <vector>

#include "subfit/semilattice.hpp"

namespace fixtures {

using subfit::FiniteLattice;
using subfit::FinitePoset;

inline FinitePoset chain(int k) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return subfit::poset_from_cover_pairs(k, covers);
}

inline FinitePoset antichain(int k) { return subfit::poset_from_cover_pairs(k, {}); }

/// Subsets of {0..k-1} ordered by inclusion; element index is the subset mask.
inline FinitePoset boolean_cube(int k) {
  int n = 1 << k;
  std::vector<std::pair<int, int>> covers;
  for (int s = 0; s < n; ++s)
    for (int b = 0; b < k; ++b)
      if (!(s >> b & 1)) covers.emplace_back(s, s | (1 << b));
  return subfit::poset_from_cover_pairs(n, covers);
}

/// Bottom, three incomparable atoms, top.
inline FinitePoset m3() {
  return subfit::poset_from_cover_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

/// The pentagon: 0 < a < b < 1 and 0 < c < 1.
inline FinitePoset n5() {
  return subfit::poset_from_cover_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

/// Six elements 0 < {a, b, t < s} < 1: the atoms a and b have subfit
/// principal downsets but their join does not.
/// Indices: 0=bottom, 1=a, 2=b, 3=t, 4=s, 5=top.
inline FinitePoset nonideal6() {
  return subfit::poset_from_cover_pairs(
      6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {1, 5}, {2, 5}, {4, 5}});
}

inline FiniteLattice lat(const FinitePoset& p) { return *subfit::try_lattice(p); }

/// Relabels a poset by a permutation (new index perm[i] for old index i).
inline FinitePoset relabel(const FinitePoset& p, const std::vector<int>& perm) {
  std::vector<subfit::Mask> up(static_cast<size_t>(p.n), 0);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (p.le(i, j))
        up[static_cast<size_t>(perm[static_cast<size_t>(i)])] |=
            subfit::bit(perm[static_cast<size_t>(j)]);
  return subfit::poset_from_up_rows(p.n, up);
}

}  // namespace fixtures
