#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subfit/envelope.hpp"
#include "subfit/space.hpp"
#include "subfit/subfitness.hpp"

namespace subfit {

struct SweepResult {
  std::string name;
  bool pass = true;
  long long instances = 0;
  long long checks = 0;
  std::vector<std::pair<std::string, long long>> counters;
  std::string counterexample;  // empty when pass
};

/// Distributive lattices up to max_n: the subfit elements form an ideal,
/// and the composing witness satisfies both postconditions on every
/// admissible (a, b, s, t); counters report the two proof branches.
/// Also cross-checks join-subfit == complemented on these instances.
SweepResult sweep_subfit_ideal(int max_n, int jobs = 1);

/// All bounded lattices up to max_n viewed as join-semilattices: envelope
/// construction passes its internal property checks and join-subfitness
/// agrees between A and the generated sublattice L; distributive inputs
/// must reproduce themselves (L isomorphic to A). The counter
/// "principal-gap" reports instances where enveloping a principal downset
/// differs from the principal downset in L (exploratory output).
SweepResult sweep_envelope(int max_n, int jobs = 1);

/// All spaces up to max_n points: opens-lattice join-subfitness iff the
/// closed points are patch-dense.
SweepResult sweep_patch_density(int max_n, int jobs = 1);

/// All spaces up to max_n points: opens-lattice meet-subfitness iff every
/// open is regular open.
SweepResult sweep_regular_open(int max_n, int jobs = 1);

/// All spaces up to max_n points and all open pairs: patch-density of
/// closed points propagates to unions of opens.
SweepResult sweep_density_union(int max_n, int jobs = 1);

/// All bounded lattices (as join-semilattices) up to max_n: ideal-based
/// subfitness equals plain join-subfitness, and the separation form
/// matches the directed witness form on every pair.
SweepResult sweep_ideally_subfit(int max_n, int jobs = 1);

/// Distributive lattices up to lat_n reproduce through their space, and
/// spaces up to space_n reproduce through their opens lattice.
SweepResult sweep_roundtrips(int lat_n, int space_n, int jobs = 1);

/// All spaces up to max_n points and all point sets: the patch closure is
/// the set itself (finite patch topologies are discrete).
SweepResult sweep_patch_discreteness(int max_n, int jobs = 1);

/// Spaces up to max_n: opens join-subfit iff the specialization order is
/// an antichain iff the opens lattice is Boolean; plus every nonempty
/// closed set contains a closed point.
SweepResult sweep_three_way(int max_n, int jobs = 1);

/// Spaces up to max_n, all nested open pairs: relative patch interiors
/// stay nonempty (the property the union argument leans on).
SweepResult sweep_relative_interior(int max_n, int jobs = 1);

}  // namespace subfit
