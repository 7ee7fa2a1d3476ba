#include "subfit/space.hpp"

#include <algorithm>

namespace subfit {

bool is_open(const FiniteSpace& x, PointSet u) { return is_downset(x.spec, u); }

QcopResult qcop(const FiniteSpace& x) {
  QcopResult res;
  res.opens = downset_masks(x.spec);
  int m = static_cast<int>(res.opens.size());
  if (m > kMaxElements)
    throw Error(Errc::InvalidInput, "opens lattice exceeds 64 elements");
  FinitePoset p;
  p.n = m;
  p.up.assign(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((res.opens[static_cast<size_t>(i)] & ~res.opens[static_cast<size_t>(j)]) == 0)
        p.up[static_cast<size_t>(i)] |= bit(j);
  p = poset_from_up_rows(m, p.up);
  auto l = try_lattice(p);
  if (!l) throw Error(Errc::PropertyCheckFailed, "opens do not form a lattice");
  res.lattice = std::move(*l);
  return res;
}

FiniteSpace birkhoff_space(const FiniteLattice& l) {
  if (!is_distributive_lattice(l)) throw Error(Errc::NotDistributive, "lattice not distributive");
  Mask ji = join_irreducibles(l);
  if (ji == 0) return FiniteSpace{FinitePoset{}};  // one-element lattice: empty space
  Restriction r = restrict_poset(l.poset(), ji);
  return FiniteSpace{r.poset};
}

PointSet closed_points(const FiniteSpace& x) {
  PointSet out = 0;
  for (int i = 0; i < x.points(); ++i)
    if (x.spec.up[static_cast<size_t>(i)] == bit(i)) out |= bit(i);
  return out;
}

namespace {

// Distinct nonempty sets U \ V over open pairs; differences are closed
// under intersection, so they are a basis, not just a subbasis.
std::vector<Mask> patch_basis(const FiniteSpace& x) {
  auto opens = downset_masks(x.spec);
  std::vector<Mask> basis;
  for (Mask u : opens)
    for (Mask v : opens) {
      Mask b = u & ~v;
      if (b) basis.push_back(b);
    }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

}  // namespace

PointSet patch_closure(const FiniteSpace& x, PointSet s) {
  Mask avoid = 0;  // union of basic sets missing S
  for (Mask b : patch_basis(x))
    if ((b & s) == 0) avoid |= b;
  return x.spec.all() & ~avoid;
}

bool is_patch_open(const FiniteSpace& x, PointSet t) {
  auto basis = patch_basis(x);
  for (int p = 0; p < x.points(); ++p) {
    if (!has(t, p)) continue;
    bool inside = false;
    for (Mask b : basis)
      if (has(b, p) && (b & ~t) == 0) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

PointSet patch_interior(const FiniteSpace& x, PointSet t) {
  PointSet out = 0;
  for (Mask b : patch_basis(x))
    if ((b & ~t) == 0) out |= b;
  return out;
}

FiniteSpace inverse_space(const FiniteSpace& x) { return FiniteSpace{dual(x.spec)}; }

bool is_regular_open(const FiniteSpace& x, PointSet u) {
  if (!is_open(x, u)) throw Error(Errc::NotOpen, "set is not open");
  // closure = upward closure; interior = points whose downset stays inside
  Mask closure = 0;
  for (int i = 0; i < x.points(); ++i)
    if (has(u, i)) closure |= x.spec.up[static_cast<size_t>(i)];
  Mask interior = 0;
  for (int i = 0; i < x.points(); ++i)
    if ((x.spec.down[static_cast<size_t>(i)] & ~closure) == 0) interior |= bit(i);
  return interior == u;
}

bool cp_patch_dense(const FiniteSpace& x) {
  return patch_closure(x, closed_points(x)) == x.spec.all();
}

bool check_patch_density_criterion(const FiniteSpace& x) {
  bool subfit = is_join_subfit(qcop(x).lattice.semilattice);
  return subfit == cp_patch_dense(x);
}

bool check_regular_open_criterion(const FiniteSpace& x) {
  bool subfit = is_meet_subfit(qcop(x).lattice);
  bool all_regular = true;
  for (Mask u : downset_masks(x.spec))
    if (!is_regular_open(x, u)) {
      all_regular = false;
      break;
    }
  return subfit == all_regular;
}

Subspace subspace(const FiniteSpace& x, PointSet pts) {
  Restriction r = restrict_poset(x.spec, pts);
  return Subspace{FiniteSpace{r.poset}, std::move(r.to_global), std::move(r.to_local)};
}

bool check_density_union(const FiniteSpace& x, PointSet u, PointSet v) {
  if (!is_open(x, u) || !is_open(x, v)) throw Error(Errc::NotOpen, "arguments must be open");
  auto dense_in = [&](PointSet w) {
    if (w == 0) return true;  // nothing to witness in the empty space
    return cp_patch_dense(subspace(x, w).space);
  };
  if (!dense_in(u) || !dense_in(v)) return true;  // hypotheses fail
  return dense_in(u | v);
}

bool check_relative_patch_interior(const FiniteSpace& x, PointSet o1, PointSet o2) {
  if (!is_open(x, o1) || !is_open(x, o2)) throw Error(Errc::NotOpen, "arguments must be open");
  if (o1 & ~o2) throw Error(Errc::BadInclusion, "first open must lie inside the second");
  if (o2 == 0) return true;
  Subspace s2 = subspace(x, o2);
  Mask o1_in_s2 = 0;
  for (int i = 0; i < s2.space.points(); ++i)
    if (has(o1, s2.to_global[static_cast<size_t>(i)])) o1_in_s2 |= bit(i);
  Subspace s1_holder = o1 ? subspace(x, o1) : Subspace{};
  Mask uni2 = s2.space.spec.all();
  for (Mask c = 0;; ++c) {
    if (is_patch_open(s2.space, c)) {
      Mask meet = c & o1_in_s2;
      if (meet != 0) {
        // re-express in the O1 subspace and demand interior there
        Mask meet_in_s1 = 0;
        for (int i = 0; i < s2.space.points(); ++i)
          if (has(meet, i)) {
            int g = s2.to_global[static_cast<size_t>(i)];
            meet_in_s1 |= bit(s1_holder.to_local[static_cast<size_t>(g)]);
          }
        if (patch_interior(s1_holder.space, meet_in_s1) == 0) return false;
      }
    }
    if (c == uni2) break;
  }
  return true;
}

}  // namespace subfit
