#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "subfit/error.hpp"

namespace subfit {

/// Element sets are 64-bit masks; element indices are their bit positions.
using Mask = std::uint64_t;

inline constexpr int kMaxElements = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has(Mask m, int i) { return (m >> i) & 1u; }
constexpr int popcount(Mask m) { return std::popcount(m); }

/// Index of the lowest set bit; only call on nonzero masks.
constexpr int first_bit(Mask m) { return std::countr_zero(m); }

/// A finite poset on indices 0..n-1 with the order relation stored as
/// dense bit rows in both directions, so `le` is one shift and
/// upset/downset queries are single-word operations.
struct FinitePoset {
  int n = 0;
  std::vector<Mask> up;    // up[i] bit j set iff i <= j
  std::vector<Mask> down;  // down[j] bit i set iff i <= j

  bool le(int i, int j) const { return has(up[static_cast<size_t>(i)], j); }
  Mask all() const { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

  bool operator==(const FinitePoset&) const = default;
};

/// Builds the poset whose order is the reflexive-transitive closure of the
/// given cover (or any acyclic) relation.
/// Throws CycleDetected if the closure violates antisymmetry,
/// InvalidInput on bad sizes or indices.
FinitePoset poset_from_cover_pairs(int n, const std::vector<std::pair<int, int>>& covers);

/// Wraps precomputed `up` rows; validates reflexivity, antisymmetry,
/// transitivity (InvalidInput otherwise).
FinitePoset poset_from_up_rows(int n, const std::vector<Mask>& up_rows);

/// Order-reversed poset. Involution: dual(dual(P)) == P.
FinitePoset dual(const FinitePoset& p);

/// The covering pairs (i, j), i covered by j, sorted lexicographically.
std::vector<std::pair<int, int>> cover_pairs(const FinitePoset& p);

/// Induced subposet on the elements of `keep`, indices compacted in
/// ascending order of the original indices.
struct Restriction {
  FinitePoset poset;
  std::vector<int> to_global;  // local index -> original index
  std::vector<int> to_local;   // original index -> local index, -1 if dropped
};
Restriction restrict_poset(const FinitePoset& p, Mask keep);

bool is_downset(const FinitePoset& p, Mask s);
bool is_upset(const FinitePoset& p, Mask s);

/// All downsets (order ideals, including the empty one), sorted by
/// (popcount, mask value). Deterministic; requires n small enough that
/// 2^n enumeration is sane (n <= 24 guard).
std::vector<Mask> downset_masks(const FinitePoset& p);

/// Order-isomorphism test by backtracking over refinement-colored classes.
bool is_isomorphic(const FinitePoset& p, const FinitePoset& q);

/// The mapping itself (p-index -> q-index) when one exists.
std::optional<std::vector<int>> find_isomorphism(const FinitePoset& p, const FinitePoset& q);

}  // namespace subfit
