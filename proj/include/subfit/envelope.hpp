#pragma once

#include <optional>
#include <vector>

#include "subfit/subfitness.hpp"

namespace subfit {

/// S (nonempty) is admissible when its infimum exists and survives joining
/// any b: inf {s v b : s in S} = (inf S) v b.
bool is_admissible(const FiniteJoinSemilattice& a, Mask s);

/// A bounds-preserving join-embedding of `domain` into `codomain`;
/// map[i] is the codomain index of domain element i.
struct JoinEmbedding {
  FiniteJoinSemilattice domain;
  FiniteJoinSemilattice codomain;
  std::vector<int> map;
};

struct ExtensionConditions {
  bool meet_approx;    // every codomain element is meet-approximated over the image
  bool inf_agreement;  // admissible infima agree between domain and codomain
};

/// Checks the two transfer conditions by finite enumeration (subset search
/// for the approximating family). Throws NotAnEmbedding on a bad map.
ExtensionConditions check_extension_conditions(const JoinEmbedding& emb);

/// With both conditions established, join-subfitness transfers across the
/// extension; returns whether the two predicates agree.
/// Throws ConditionsNotMet when a condition fails.
bool check_subfit_transfer(const JoinEmbedding& emb);

/// The distributive envelope of a bounded join-semilattice:
/// E = admissible-closed upsets (each contains the top) under reverse
/// inclusion, eta(a) = up(a), and L = the bounded sublattice of E
/// generated by the image.
struct EnvelopeResult {
  FiniteLattice envelope;              // E
  std::vector<Mask> envelope_sets;     // E index -> member upset (mask over A)
  std::vector<int> eta;                // A index -> E index
  FiniteLattice sublattice;            // L
  std::vector<Mask> sublattice_sets;   // L index -> member upset
  std::vector<int> embedding_table;    // A index -> L index
  ExtensionConditions conditions;      // for A inside L
};

/// Builds E and L and hard-verifies the construction: E distributive, eta
/// a bounds/join-preserving embedding, admissible infima preserved into E,
/// and both extension conditions for A inside L. Any failure throws
/// PropertyCheckFailed (a construction bug, never silently returned).
EnvelopeResult build_envelope(const FiniteJoinSemilattice& a);

/// A is join-subfit iff its envelope sublattice L is; returns whether the
/// two predicates agree (the sweep asserts they always do).
bool verify_envelope_subfit(const FiniteJoinSemilattice& a);

}  // namespace subfit
