#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "subfit/counterexample.hpp"

namespace subfit {

/// Extra points of the symbolic space beyond the sequence points p_i
/// (i >= 3). The identification with the family's universe is 0 <-> x,
/// 1 <-> y, 2 <-> z; the only specialization is z below y.
inline constexpr std::uint8_t kPointX = 1;
inline constexpr std::uint8_t kPointY = 2;
inline constexpr std::uint8_t kPointZ = 4;

/// A compact open of the symbolic space: a finite-or-cofinite part of the
/// sequence points (supports live in N>=3) plus a subset of {x, y, z}.
struct SymbolicOpen {
  FinOrCofin p_part;      // within the universe N>=3
  std::uint8_t extra = 0;

  bool operator==(const SymbolicOpen&) const = default;
  std::string to_string() const;
};

/// Compact-openness: y forces z (openness), x or z force a cofinite
/// sequence part (their neighborhoods eat the sequence), and an empty
/// extra part forces a finite one (the cofinite pure-sequence sets are the
/// non-compact opens).
bool in_qcop(const SymbolicOpen& u);

/// Membership restricted to the open pieces V = P u {x} and W = P u {y,z}.
bool in_qcop_v(const SymbolicOpen& u);
bool in_qcop_w(const SymbolicOpen& u);

SymbolicOpen full_space();  // X itself
SymbolicOpen piece_v();     // P u {x}
SymbolicOpen piece_w();     // P u {y,z}

SymbolicOpen union_open(const SymbolicOpen& a, const SymbolicOpen& b);

/// Set intersection when it stays compact open; empty result demonstrates
/// the failure of lattice closure.
std::optional<SymbolicOpen> inter_open(const SymbolicOpen& a, const SymbolicOpen& b);

bool subseteq_open(const SymbolicOpen& a, const SymbolicOpen& b);

/// The complement identification between the family and QCOP of the space:
/// family member E maps to X minus (E read through i <-> p_i, 0 <-> x,
/// 1 <-> y, 2 <-> z). Order-reversing bijection. Throws NotInFamily.
SymbolicOpen antiiso(const FinOrCofin& e);
FinOrCofin antiiso_inv(const SymbolicOpen& u);

/// Exactly one of the six pointwise identifications {0,1,2} <-> {x,y,z}
/// sends family complements onto valid opens (checked over the trace-class
/// skeleton); returns whether that unique one is 0->x, 1->y, 2->z.
bool identification_is_unique();

/// Subfitness witness on the V side: for family members above {1,2} with
/// y_hat not<= x_hat, returns {1, 2, n} for the least n >= 3 in the
/// difference. Throws PreconditionViolated.
FinOrCofin v_side_witness(const FinOrCofin& x_hat, const FinOrCofin& y_hat);

/// The opens lattice of X is not join-subfit: the patch-open difference
/// (P u {z}) \ (P u {x}) is the singleton {z}, which contains no closed
/// point; and the family's refutation pair transports to a directed-form
/// refutation in QCOP(X), checked over the six extra classes.
struct SpaceRefutation {
  SymbolicOpen big;                   // P u {z}
  SymbolicOpen small;                 // P u {x}
  bool diff_is_singleton_z = false;   // the difference is exactly {z}
  bool z_is_closed_point = true;      // false: y lies in cl{z}
  bool closed_point_free = false;     // the difference misses every closed point
  FinOrCofin transported_lhs;         // image source {1}
  FinOrCofin transported_rhs;         // image source {1,2}
  SymbolicOpen transported_u;         // antiiso({1})
  SymbolicOpen transported_v;         // antiiso({1,2})
  bool transported_pair_incomparable = false;
  bool no_witness_exists = false;     // u v Z = X forces v v Z = X, all classes
  int classes_checked = 0;
};
SpaceRefutation refute_space_subfit();

/// V and W are compact open, their intersection escapes, and both carry
/// join-subfit opens lattices (witness constructors checked on samples).
struct CoverPieceReport {
  bool v_in_qcop = false;
  bool w_in_qcop = false;
  bool inter_escapes = false;
  long long samples = 0;
  bool w_side_pass = false;
  bool v_side_pass = false;
  std::string counterexample;
};
CoverPieceReport check_cover_pieces(long long samples, std::uint64_t seed,
                                    std::uint32_t bound = 30);

/// Order-reversal, image validity and round-trip of antiiso on samples.
struct AntiisoReport {
  long long samples = 0;
  bool pass = false;
  std::string counterexample;
};
AntiisoReport run_antiiso_checks(long long samples, std::uint64_t seed, std::uint32_t bound = 30);

/// Union-closure of QCOP(X) on samples (intersection escape is in
/// refute/cover reports).
AntiisoReport run_union_closure_checks(long long samples, std::uint64_t seed,
                                       std::uint32_t bound = 30);

}  // namespace subfit
