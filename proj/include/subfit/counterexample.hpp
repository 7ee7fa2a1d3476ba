#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "subfit/fincofin.hpp"

namespace subfit {

/// The distinguished meet-subsemilattice of P(N) built from finite sets
/// classified by their trace on {0,1,2} plus the cofinite sets containing
/// {0,1,2}. Membership of a finite E depends only on E intersect {0,1,2}
/// landing in {{}, {0}, {1}, {0,1}, {1,2}}.
enum class TraceClass { none, zero, one, zero_one, one_two, cofinite };

constexpr int kTraceClassCount = 6;

const char* trace_class_name(TraceClass c);

/// The class of E inside the family, or nothing when E is outside it.
std::optional<TraceClass> family_class(const FinOrCofin& e);

bool in_family(const FinOrCofin& e);

/// The family plus the finite sets with full trace {0,1,2}; this is the
/// sublattice of P(N) the family generates.
bool in_lattice_closure(const FinOrCofin& e);

/// Intersection inside the family (closed by the trace classification).
/// Throws NotInFamily.
FinOrCofin family_meet(const FinOrCofin& a, const FinOrCofin& b);

/// Distinguished elements {0}, {1}, {1,2}.
FinOrCofin elem_a();
FinOrCofin elem_b();
FinOrCofin elem_c();

/// Meet-subfitness witness in the upset of {0}: for x, y above {0} with
/// y not<= x, a z above {0} with x ^ z = {0} and y ^ z != {0}.
/// Throws PreconditionViolated.
FinOrCofin upset0_witness(const FinOrCofin& x, const FinOrCofin& y);

/// Same in the upset of {1}; z = {1, n} for the least n in y \ x.
FinOrCofin upset1_witness(const FinOrCofin& x, const FinOrCofin& y);

/// The family is not meet-subfit: for the pair ({1}, {1,2}) no separating
/// z exists, shown exactly over the six trace classes (tail elements never
/// influence the test, so the class analysis is complete).
struct RefutationReport {
  FinOrCofin lhs;                    // {1}
  FinOrCofin rhs;                    // {1,2}
  std::vector<FinOrCofin> below_rhs; // family elements inside {1,2}
  int classes_checked = 0;
  bool witness_exists = true;
};
RefutationReport meet_subfit_refutation();

/// Distributivity witness for the upset of {1}: given x ^ y <= z there, it
/// returns x' >= x, y' >= y with x' ^ y' = z. `case_tag` (when non-null)
/// records which proof path ran: "a", "b-union", "b-fix-left",
/// "b-fix-right". Throws PreconditionViolated.
std::pair<FinOrCofin, FinOrCofin> upset1_distrib_witness(const FinOrCofin& x,
                                                         const FinOrCofin& y,
                                                         const FinOrCofin& z,
                                                         std::string* case_tag = nullptr);

/// Distributivity witness for the whole family; case tags are
/// "i", "ii-union", "ii-fix-left", ..., "iv-fix-right".
std::pair<FinOrCofin, FinOrCofin> family_distrib_witness(const FinOrCofin& x,
                                                         const FinOrCofin& y,
                                                         const FinOrCofin& z,
                                                         std::string* case_tag = nullptr);

/// Seeded generator of family elements with support inside {0..bound}.
class FamilySampler {
 public:
  FamilySampler(std::uint32_t bound, std::uint64_t seed);

  FinOrCofin sample();
  FinOrCofin sample_class(TraceClass c);
  /// Random superset of `base` landing in class `c`; requires the class
  /// trace to contain the base trace.
  FinOrCofin sample_superset(const FinOrCofin& base, TraceClass c);
  std::vector<std::uint32_t> sample_tail();

  std::mt19937_64& rng() { return rng_; }
  std::uint32_t bound() const { return bound_; }

 private:
  std::uint32_t bound_;
  std::mt19937_64 rng_;
};

/// One pass/fail record per checked claim, with per-proof-case counters
/// and a shrunk counterexample description on failure.
struct ClaimOutcome {
  int claim = 0;
  long long samples = 0;
  bool pass = false;
  std::vector<std::pair<std::string, long long>> case_counts;
  std::string counterexample;
};

/// Runs claim 1..6 with `samples` seeded inputs (claim 3 is exact and
/// ignores the sample count). bound >= 4.
ClaimOutcome run_claim(int which, long long samples, std::uint64_t seed, std::uint32_t bound = 30);

/// Intersection-closure of the family on random pairs.
ClaimOutcome run_meet_closure(long long samples, std::uint64_t seed, std::uint32_t bound = 30);

}  // namespace subfit
