#pragma once

#include <cstdint>
#include <vector>

#include "subfit/semilattice.hpp"

namespace subfit {

/// One representative per isomorphism class of posets with 1..max_n
/// elements, sizes ascending. Practical bound max_n <= 7.
std::vector<FinitePoset> enumerate_posets(int max_n);

/// One representative per isomorphism class of (bounded) lattices with
/// 1..max_n elements, sizes ascending. Practical bound max_n <= 8.
///
/// Generation adds elements in linear-extension order, choosing each new
/// element's strict downset among the downsets of the partial poset;
/// branches that can no longer complete to a lattice (a pair whose meet is
/// already missing, or whose upper bounds have no least member) are cut.
std::vector<FiniteLattice> enumerate_lattices(int max_n);

/// Class-respecting minimal encoding of the order matrix (n <= 8, so it
/// fits one word). Equal keys iff isomorphic.
std::uint64_t canonical_key(const FinitePoset& p);

}  // namespace subfit
