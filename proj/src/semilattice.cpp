#include "subfit/semilattice.hpp"

namespace subfit {

std::optional<int> sup_of(const FinitePoset& p, Mask s) {
  if (s == 0) return std::nullopt;
  Mask ubs = p.all();
  for (int i = 0; i < p.n; ++i)
    if (has(s, i)) ubs &= p.up[static_cast<size_t>(i)];
  for (Mask m = ubs; m;) {
    int u = first_bit(m);
    m &= m - 1;
    if ((ubs & ~p.up[static_cast<size_t>(u)]) == 0) return u;  // u below every upper bound
  }
  return std::nullopt;
}

std::optional<int> inf_of(const FinitePoset& p, Mask s) {
  if (s == 0) return std::nullopt;
  Mask lbs = p.all();
  for (int i = 0; i < p.n; ++i)
    if (has(s, i)) lbs &= p.down[static_cast<size_t>(i)];
  for (Mask m = lbs; m;) {
    int u = first_bit(m);
    m &= m - 1;
    if ((lbs & ~p.down[static_cast<size_t>(u)]) == 0) return u;
  }
  return std::nullopt;
}

namespace {

std::optional<int> unique_min(const FinitePoset& p) {
  for (int i = 0; i < p.n; ++i)
    if (p.up[static_cast<size_t>(i)] == p.all()) return i;
  return std::nullopt;
}

std::optional<int> unique_max(const FinitePoset& p) {
  for (int i = 0; i < p.n; ++i)
    if (p.down[static_cast<size_t>(i)] == p.all()) return i;
  return std::nullopt;
}

}  // namespace

std::optional<FiniteJoinSemilattice> try_join_semilattice(const FinitePoset& p) {
  FiniteJoinSemilattice a;
  a.poset = p;
  size_t n = static_cast<size_t>(p.n);
  a.join.assign(n * n, 0);
  for (int x = 0; x < p.n; ++x)
    for (int y = x; y < p.n; ++y) {
      auto j = sup_of(p, bit(x) | bit(y));
      if (!j) return std::nullopt;
      a.join[static_cast<size_t>(x) * n + static_cast<size_t>(y)] = static_cast<std::uint8_t>(*j);
      a.join[static_cast<size_t>(y) * n + static_cast<size_t>(x)] = static_cast<std::uint8_t>(*j);
    }
  a.bottom = unique_min(p);
  a.top = unique_max(p);
  return a;
}

std::optional<FiniteLattice> try_lattice(const FinitePoset& p) {
  auto js = try_join_semilattice(p);
  if (!js) return std::nullopt;
  FiniteLattice l;
  l.semilattice = std::move(*js);
  size_t n = static_cast<size_t>(p.n);
  l.meet.assign(n * n, 0);
  for (int x = 0; x < p.n; ++x)
    for (int y = x; y < p.n; ++y) {
      auto m = inf_of(p, bit(x) | bit(y));
      if (!m) return std::nullopt;
      l.meet[static_cast<size_t>(x) * n + static_cast<size_t>(y)] = static_cast<std::uint8_t>(*m);
      l.meet[static_cast<size_t>(y) * n + static_cast<size_t>(x)] = static_cast<std::uint8_t>(*m);
    }
  return l;
}

FiniteLattice dual_lattice(const FiniteLattice& l) {
  FiniteLattice d;
  d.semilattice.poset = dual(l.poset());
  d.semilattice.join = l.meet;
  d.meet = l.semilattice.join;
  d.semilattice.bottom = l.semilattice.top;
  d.semilattice.top = l.semilattice.bottom;
  return d;
}

bool is_distributive_join_semilattice(const FiniteJoinSemilattice& a) {
  int n = a.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = a.join_of(x, y);
      Mask below = a.poset.down[static_cast<size_t>(xy)];
      for (Mask cm = below; cm;) {
        int c = first_bit(cm);
        cm &= cm - 1;
        bool found = false;
        Mask dx = a.poset.down[static_cast<size_t>(x)];
        for (Mask am = dx; am && !found;) {
          int ap = first_bit(am);
          am &= am - 1;
          Mask dy = a.poset.down[static_cast<size_t>(y)];
          for (Mask bm = dy; bm;) {
            int bp = first_bit(bm);
            bm &= bm - 1;
            if (a.join_of(ap, bp) == c) {
              found = true;
              break;
            }
          }
        }
        if (!found) return false;
      }
    }
  return true;
}

bool is_distributive_lattice(const FiniteLattice& l) {
  int n = l.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.meet_of(x, l.join_of(y, z)) != l.join_of(l.meet_of(x, y), l.meet_of(x, z)))
          return false;
  return true;
}

bool is_complemented(const FiniteLattice& l) {
  int n = l.n();
  int bot = l.bottom(), top = l.top();
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y)
      if (l.join_of(x, y) == top && l.meet_of(x, y) == bot) found = true;
    if (!found) return false;
  }
  return true;
}

Mask join_irreducibles(const FiniteLattice& l) {
  int n = l.n();
  Mask out = 0;
  int bot = l.bottom();
  for (int x = 0; x < n; ++x) {
    if (x == bot) continue;
    bool reducible = false;
    for (int a = 0; a < n && !reducible; ++a) {
      if (a == x) continue;
      for (int b = 0; b < n; ++b) {
        if (b == x) continue;
        if (l.join_of(a, b) == x) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) out |= bit(x);
  }
  return out;
}

SubSemilattice restrict_to_principal_downset(const FiniteJoinSemilattice& a, int elem) {
  if (elem < 0 || elem >= a.n()) throw Error(Errc::InvalidInput, "element index out of range");
  Restriction r = restrict_poset(a.poset, a.poset.down[static_cast<size_t>(elem)]);
  SubSemilattice sub;
  sub.to_global = std::move(r.to_global);
  sub.to_local = std::move(r.to_local);
  auto js = try_join_semilattice(r.poset);
  // x, y <= elem implies x v y <= elem, so the downset is join-closed.
  if (!js) throw Error(Errc::PropertyCheckFailed, "principal downset lost joins");
  sub.sl = std::move(*js);
  return sub;
}

}  // namespace subfit
