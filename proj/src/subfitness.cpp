#include "subfit/subfitness.hpp"

#include <algorithm>

namespace subfit {

bool is_join_subfit(const FiniteJoinSemilattice& a) {
  if (!a.top) throw Error(Errc::MissingTop, "join-subfitness needs an absorbing top");
  int n = a.n(), top = *a.top;
  std::vector<Mask> ann(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < n; ++c)
      if (a.join_of(x, c) == top) ann[static_cast<size_t>(x)] |= bit(c);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (ann[static_cast<size_t>(x)] == ann[static_cast<size_t>(y)]) return false;
  return true;
}

bool is_meet_subfit(const FiniteLattice& l) {
  if (!l.semilattice.bottom) throw Error(Errc::MissingBottom, "meet-subfitness needs a bottom");
  return is_join_subfit(dual_lattice(l).semilattice);
}

bool is_meet_subfit(const FinitePoset& p) {
  auto meets = try_join_semilattice(dual(p));
  if (!meets) throw Error(Errc::InvalidInput, "binary meets are not all present");
  if (!meets->top) throw Error(Errc::MissingBottom, "meet-subfitness needs a bottom");
  return is_join_subfit(*meets);
}

std::optional<SubfitWitness> join_subfit_witness(const FiniteJoinSemilattice& a, int u, int v) {
  if (!a.top) throw Error(Errc::MissingTop, "witness search needs an absorbing top");
  int n = a.n();
  if (u < 0 || u >= n || v < 0 || v >= n) throw Error(Errc::InvalidInput, "index out of range");
  if (a.le(u, v)) throw Error(Errc::NotComparable, "witness requires u not<= v");
  int top = *a.top;
  for (int z = 0; z < n; ++z)
    if (a.join_of(u, z) == top && a.join_of(v, z) != top) return SubfitWitness{u, v, z};
  return std::nullopt;
}

SubfitElementReport subfit_elements(const FiniteJoinSemilattice& a) {
  SubfitElementReport rep;
  int n = a.n();
  for (int x = 0; x < n; ++x) {
    auto sub = restrict_to_principal_downset(a, x);
    if (is_join_subfit(sub.sl)) rep.subfit_set |= bit(x);
  }
  rep.is_downset = true;
  for (int x = 0; x < n && rep.is_downset; ++x)
    if (has(rep.subfit_set, x) && (a.poset.down[static_cast<size_t>(x)] & ~rep.subfit_set))
      rep.is_downset = false;
  rep.is_ideal = rep.is_downset;
  for (int x = 0; x < n && rep.is_ideal; ++x) {
    if (!has(rep.subfit_set, x)) continue;
    for (int y = x; y < n; ++y) {
      if (!has(rep.subfit_set, y)) continue;
      if (!has(rep.subfit_set, a.join_of(x, y))) {
        rep.is_ideal = false;
        if (rep.is_downset) rep.offending_pair = {x, y};
        break;
      }
    }
  }
  return rep;
}

namespace {

// Witness inside the principal downset of `cap`, in global coordinates.
// The caller has already certified the downset subfit and u not<= v.
int witness_in_downset(const FiniteJoinSemilattice& a, int cap, int u, int v) {
  auto sub = restrict_to_principal_downset(a, cap);
  auto w = join_subfit_witness(sub.sl, sub.to_local[static_cast<size_t>(u)],
                               sub.to_local[static_cast<size_t>(v)]);
  if (!w)
    throw Error(Errc::PreconditionViolated, "principal downset failed its subfitness oracle");
  return sub.to_global[static_cast<size_t>(w->c)];
}

}  // namespace

SubfitJoinWitness subfit_join_witness(const FiniteLattice& l, int a, int b, int s, int t) {
  int n = l.n();
  for (int idx : {a, b, s, t})
    if (idx < 0 || idx >= n) throw Error(Errc::InvalidInput, "index out of range");
  if (!l.semilattice.bounded())
    throw Error(Errc::PreconditionViolated, "lattice must be bounded");
  if (!is_distributive_lattice(l)) throw Error(Errc::NotDistributive, "lattice not distributive");
  int top = l.top();
  if (l.join_of(a, b) != top) throw Error(Errc::PreconditionViolated, "a v b must be the top");
  if (l.le(t, s)) throw Error(Errc::PreconditionViolated, "requires t not<= s");

  const FiniteJoinSemilattice& js = l.semilattice;
  for (int side : {a, b}) {
    auto sub = restrict_to_principal_downset(js, side);
    if (!is_join_subfit(sub.sl))
      throw Error(Errc::PreconditionViolated, "principal downset is not join-subfit");
  }

  // Work on the side whose meets with t and s stay incomparable; b first.
  int fst = a, snd = b;
  if (l.le(l.meet_of(snd, t), l.meet_of(snd, s))) std::swap(fst, snd);
  if (l.le(l.meet_of(snd, t), l.meet_of(snd, s)))
    throw Error(Errc::PreconditionViolated, "both sides collapse; t <= s would follow");

  int y = witness_in_downset(js, snd, l.meet_of(snd, t), l.meet_of(snd, s));

  SubfitJoinWitness out{};
  if (l.join_of(l.join_of(s, y), fst) != top) {
    out.z = l.join_of(y, fst);
    out.composite = false;
  } else {
    int w = l.join_of(l.meet_of(snd, s), y);
    int u2 = l.meet_of(fst, t);
    int v2 = l.meet_of(fst, l.join_of(s, w));
    if (l.le(u2, v2))
      throw Error(Errc::PreconditionViolated, "corrected pair became comparable");
    int x = witness_in_downset(js, fst, u2, v2);
    out.z = l.join_of(w, x);
    out.composite = true;
  }
  if (l.join_of(s, out.z) == top || l.join_of(t, out.z) != top)
    throw Error(Errc::PropertyCheckFailed, "witness postcondition failed");
  return out;
}

bool verify_subfit_ideal(const FiniteLattice& l) {
  if (!is_distributive_lattice(l)) throw Error(Errc::NotDistributive, "lattice not distributive");
  return subfit_elements(l.semilattice).is_ideal;
}

std::vector<Mask> ideals_of(const FiniteJoinSemilattice& a) {
  int n = a.n();
  if (n > 24) throw Error(Errc::InvalidInput, "ideal enumeration capped at 24 elements");
  std::vector<Mask> out;
  Mask universe = a.poset.all();
  for (Mask s = 1;; ++s) {
    bool ok = is_downset(a.poset, s);
    for (int x = 0; x < n && ok; ++x) {
      if (!has(s, x)) continue;
      for (int y = x; y < n; ++y)
        if (has(s, y) && !has(s, a.join_of(x, y))) {
          ok = false;
          break;
        }
    }
    if (ok) out.push_back(s);
    if (s == universe) break;
  }
  return out;
}

namespace {

// Join in the ideal lattice: close the union downward and under joins.
Mask ideal_join(const FiniteJoinSemilattice& a, Mask u, Mask v) {
  Mask cur = u | v;
  int n = a.n();
  for (;;) {
    Mask next = cur;
    for (int x = 0; x < n; ++x) {
      if (!has(cur, x)) continue;
      next |= a.poset.down[static_cast<size_t>(x)];
      for (int y = x; y < n; ++y)
        if (has(cur, y)) next |= bit(a.join_of(x, y));
    }
    if (next == cur) return cur;
    cur = next;
  }
}

}  // namespace

bool is_ideally_subfit(const FiniteJoinSemilattice& a) {
  int n = a.n();
  Mask universe = a.poset.all();
  auto ideals = ideals_of(a);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || a.le(u, v)) continue;
      Mask du = a.poset.down[static_cast<size_t>(u)];
      Mask dv = a.poset.down[static_cast<size_t>(v)];
      bool found = false;
      for (Mask w : ideals)
        if (ideal_join(a, du, w) == universe && ideal_join(a, dv, w) != universe) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

}  // namespace subfit
