#pragma once

#include <vector>

#include "subfit/subfitness.hpp"

namespace subfit {

/// A finite T0 space given by its specialization poset: p <= q means q lies
/// in the closure of {p}. Opens are exactly the downsets; closed points are
/// the maximal points.
struct FiniteSpace {
  FinitePoset spec;
  int points() const { return spec.n; }
};

using PointSet = Mask;

bool is_open(const FiniteSpace& x, PointSet u);

/// The lattice of opens ordered by inclusion (every open of a finite space
/// is compact), with the open set carried per lattice index.
struct QcopResult {
  FiniteLattice lattice;
  std::vector<Mask> opens;  // lattice index -> point set
};
QcopResult qcop(const FiniteSpace& x);

/// The space whose opens realize a distributive lattice: points are the
/// join-irreducibles under the induced order. Round trip law:
/// qcop(birkhoff_space(L)) is isomorphic to L. Throws NotDistributive.
FiniteSpace birkhoff_space(const FiniteLattice& l);

/// Maximal points of the specialization order.
PointSet closed_points(const FiniteSpace& x);

/// Closure of S in the topology generated by all differences U \ V of
/// opens, computed from that basis (finite patch topologies are discrete,
/// but that is a theorem the tests confirm, not an assumption here).
PointSet patch_closure(const FiniteSpace& x, PointSet s);

bool is_patch_open(const FiniteSpace& x, PointSet t);
PointSet patch_interior(const FiniteSpace& x, PointSet t);

/// Same points, reversed specialization order.
FiniteSpace inverse_space(const FiniteSpace& x);

/// U equals the interior of its closure (both in the space topology).
/// Throws NotOpen.
bool is_regular_open(const FiniteSpace& x, PointSet u);

/// Opens-lattice join-subfitness vs patch-density of the closed points:
/// returns whether the two sides agree.
bool check_patch_density_criterion(const FiniteSpace& x);

/// Opens-lattice meet-subfitness vs regularity of every open.
bool check_regular_open_criterion(const FiniteSpace& x);

/// Induced subspace on a point set (open or not), indices compacted.
struct Subspace {
  FiniteSpace space;
  std::vector<int> to_global;
  std::vector<int> to_local;
};
Subspace subspace(const FiniteSpace& x, PointSet pts);

/// Closed points of the space are patch-dense in it.
bool cp_patch_dense(const FiniteSpace& x);

/// If the closed points of open subspaces U and V are patch-dense in each,
/// the same holds for U union V; returns the implication. Throws NotOpen.
bool check_density_union(const FiniteSpace& x, PointSet u, PointSet v);

/// For opens O1 inside O2: every patch-open subset of the subspace O2
/// meets O1 emptily or with nonempty patch interior relative to O1.
/// Throws NotOpen / BadInclusion.
bool check_relative_patch_interior(const FiniteSpace& x, PointSet o1, PointSet o2);

}  // namespace subfit
