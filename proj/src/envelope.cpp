#include "subfit/envelope.hpp"

#include <algorithm>
#include <map>

namespace subfit {

bool is_admissible(const FiniteJoinSemilattice& a, Mask s) {
  if (s == 0) throw Error(Errc::InvalidInput, "admissibility is about nonempty subsets");
  auto inf = inf_of(a.poset, s);
  if (!inf) return false;
  int n = a.n();
  for (int b = 0; b < n; ++b) {
    Mask joined = 0;
    for (Mask m = s; m;) {
      int e = first_bit(m);
      m &= m - 1;
      joined |= bit(a.join_of(e, b));
    }
    auto ij = inf_of(a.poset, joined);
    if (!ij || *ij != a.join_of(*inf, b)) return false;
  }
  return true;
}

namespace {

struct AdmissibleTable {
  std::vector<Mask> sets;
  std::vector<int> infs;
};

AdmissibleTable admissible_subsets(const FiniteJoinSemilattice& a) {
  AdmissibleTable t;
  Mask universe = a.poset.all();
  for (Mask s = 1;; ++s) {
    if (is_admissible(a, s)) {
      t.sets.push_back(s);
      t.infs.push_back(*inf_of(a.poset, s));
    }
    if (s == universe) break;
  }
  return t;
}

Mask admissible_closure(Mask u, int top, const AdmissibleTable& adm) {
  Mask cur = u | bit(top);  // closure under the empty family's infimum
  for (;;) {
    Mask next = cur;
    for (size_t k = 0; k < adm.sets.size(); ++k)
      if ((adm.sets[k] & ~cur) == 0) next |= bit(adm.infs[k]);
    if (next == cur) return cur;
    cur = next;
  }
}

FiniteLattice lattice_by_reverse_inclusion(const std::vector<Mask>& sets, const char* what) {
  int m = static_cast<int>(sets.size());
  if (m < 1 || m > kMaxElements)
    throw Error(Errc::InvalidInput, std::string(what) + " does not fit 1..64 elements");
  FinitePoset p;
  p.n = m;
  p.up.assign(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((sets[static_cast<size_t>(j)] & ~sets[static_cast<size_t>(i)]) == 0)
        p.up[static_cast<size_t>(i)] |= bit(j);  // i <= j iff set_i contains set_j
  p = poset_from_up_rows(m, p.up);
  auto l = try_lattice(p);
  if (!l) throw Error(Errc::PropertyCheckFailed, std::string(what) + " is not a lattice");
  return *l;
}

void sort_reverse_inclusion(std::vector<Mask>& sets) {
  std::sort(sets.begin(), sets.end(), [](Mask x, Mask y) {
    int px = popcount(x), py = popcount(y);
    return px != py ? px > py : x < y;
  });
}

}  // namespace

ExtensionConditions check_extension_conditions(const JoinEmbedding& emb) {
  const auto& a = emb.domain;
  const auto& b = emb.codomain;
  int na = a.n(), nb = b.n();
  if (static_cast<int>(emb.map.size()) != na)
    throw Error(Errc::NotAnEmbedding, "map size mismatch");
  if (!a.bounded() || !b.bounded())
    throw Error(Errc::NotAnEmbedding, "both sides must be bounded");
  Mask image = 0;
  for (int i = 0; i < na; ++i) {
    int m = emb.map[static_cast<size_t>(i)];
    if (m < 0 || m >= nb) throw Error(Errc::NotAnEmbedding, "map target out of range");
    if (has(image, m)) throw Error(Errc::NotAnEmbedding, "map not injective");
    image |= bit(m);
  }
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y)
      if (emb.map[static_cast<size_t>(a.join_of(x, y))] !=
          b.join_of(emb.map[static_cast<size_t>(x)], emb.map[static_cast<size_t>(y)]))
        throw Error(Errc::NotAnEmbedding, "map does not preserve joins");
  if (emb.map[static_cast<size_t>(*a.bottom)] != *b.bottom ||
      emb.map[static_cast<size_t>(*a.top)] != *b.top)
    throw Error(Errc::NotAnEmbedding, "map does not preserve bounds");

  ExtensionConditions out{true, true};

  // (a): each codomain element is meet-approximated by a finite family from
  // the image, uniformly over all joins with domain elements.
  Mask a_universe = a.poset.all();
  for (int e = 0; e < nb && out.meet_approx; ++e) {
    bool found = false;
    for (Mask t = 1; t <= a_universe && !found; ++t) {
      bool ok = true;
      for (int x = 0; x < na && ok; ++x) {
        int lhs = b.join_of(emb.map[static_cast<size_t>(x)], e);
        Mask joined = 0;
        for (Mask m = t; m;) {
          int i = first_bit(m);
          m &= m - 1;
          joined |= bit(b.join_of(emb.map[static_cast<size_t>(x)], emb.map[static_cast<size_t>(i)]));
        }
        auto inf = inf_of(b.poset, joined);
        if (!inf || *inf != lhs) ok = false;
      }
      if (ok) found = true;
    }
    if (!found) out.meet_approx = false;
  }

  // (b): admissible infima computed in the domain survive into the codomain.
  for (Mask f = 1; f <= a_universe && out.inf_agreement; ++f) {
    if (!is_admissible(a, f)) continue;
    Mask imgs = 0;
    for (Mask m = f; m;) {
      int i = first_bit(m);
      m &= m - 1;
      imgs |= bit(emb.map[static_cast<size_t>(i)]);
    }
    auto inf_b = inf_of(b.poset, imgs);
    if (!inf_b || *inf_b != emb.map[static_cast<size_t>(*inf_of(a.poset, f))])
      out.inf_agreement = false;
  }
  return out;
}

bool check_subfit_transfer(const JoinEmbedding& emb) {
  auto conds = check_extension_conditions(emb);
  if (!conds.meet_approx || !conds.inf_agreement)
    throw Error(Errc::ConditionsNotMet, "extension conditions do not hold");
  return is_join_subfit(emb.domain) == is_join_subfit(emb.codomain);
}

EnvelopeResult build_envelope(const FiniteJoinSemilattice& a) {
  int n = a.n();
  if (n > 12) throw Error(Errc::InvalidInput, "envelope construction capped at 12 elements");
  if (!a.top) throw Error(Errc::MissingTop, "envelope needs a bounded semilattice");
  if (!a.bottom) throw Error(Errc::MissingBottom, "envelope needs a bounded semilattice");
  int top = *a.top;

  auto adm = admissible_subsets(a);

  EnvelopeResult res;
  Mask universe = a.poset.all();
  for (Mask u = 0;; ++u) {
    if (is_upset(a.poset, u) && admissible_closure(u, top, adm) == u)
      res.envelope_sets.push_back(u);
    if (u == universe) break;
  }
  sort_reverse_inclusion(res.envelope_sets);
  res.envelope = lattice_by_reverse_inclusion(res.envelope_sets, "envelope");

  auto index_of = [&](Mask u) {
    auto it = std::find(res.envelope_sets.begin(), res.envelope_sets.end(), u);
    if (it == res.envelope_sets.end())
      throw Error(Errc::PropertyCheckFailed, "set escaped the envelope closure system");
    return static_cast<int>(it - res.envelope_sets.begin());
  };

  res.eta.resize(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    res.eta[static_cast<size_t>(x)] = index_of(a.poset.up[static_cast<size_t>(x)]);

  if (!is_distributive_lattice(res.envelope))
    throw Error(Errc::PropertyCheckFailed, "envelope is not distributive");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (res.envelope.join_of(res.eta[static_cast<size_t>(x)], res.eta[static_cast<size_t>(y)]) !=
          res.eta[static_cast<size_t>(a.join_of(x, y))])
        throw Error(Errc::PropertyCheckFailed, "eta does not preserve joins");
  if (res.eta[static_cast<size_t>(*a.bottom)] != res.envelope.bottom() ||
      res.eta[static_cast<size_t>(top)] != res.envelope.top())
    throw Error(Errc::PropertyCheckFailed, "eta does not preserve bounds");
  for (size_t k = 0; k < adm.sets.size(); ++k) {
    int acc = -1;
    for (Mask m = adm.sets[k]; m;) {
      int e = first_bit(m);
      m &= m - 1;
      int img = res.eta[static_cast<size_t>(e)];
      acc = acc < 0 ? img : res.envelope.meet_of(acc, img);
    }
    if (acc != res.eta[static_cast<size_t>(adm.infs[k])])
      throw Error(Errc::PropertyCheckFailed, "admissible infimum not preserved into envelope");
  }

  // L: close the image under the envelope's meets and joins.
  Mask in_l = 0;
  for (int x = 0; x < n; ++x) in_l |= bit(res.eta[static_cast<size_t>(x)]);
  for (;;) {
    Mask next = in_l;
    for (int i = 0; i < res.envelope.n(); ++i) {
      if (!has(in_l, i)) continue;
      for (int j = i; j < res.envelope.n(); ++j) {
        if (!has(in_l, j)) continue;
        next |= bit(res.envelope.join_of(i, j));
        next |= bit(res.envelope.meet_of(i, j));
      }
    }
    if (next == in_l) break;
    in_l = next;
  }
  for (int i = 0; i < res.envelope.n(); ++i)
    if (has(in_l, i)) res.sublattice_sets.push_back(res.envelope_sets[static_cast<size_t>(i)]);
  sort_reverse_inclusion(res.sublattice_sets);
  res.sublattice = lattice_by_reverse_inclusion(res.sublattice_sets, "envelope sublattice");

  res.embedding_table.resize(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    Mask u = a.poset.up[static_cast<size_t>(x)];
    auto it = std::find(res.sublattice_sets.begin(), res.sublattice_sets.end(), u);
    if (it == res.sublattice_sets.end())
      throw Error(Errc::PropertyCheckFailed, "image element missing from sublattice");
    res.embedding_table[static_cast<size_t>(x)] =
        static_cast<int>(it - res.sublattice_sets.begin());
  }

  JoinEmbedding emb{a, res.sublattice.semilattice, res.embedding_table};
  res.conditions = check_extension_conditions(emb);
  if (!res.conditions.meet_approx)
    throw Error(Errc::PropertyCheckFailed, "meet approximation fails for the sublattice");
  if (!res.conditions.inf_agreement)
    throw Error(Errc::PropertyCheckFailed, "admissible infima disagree in the sublattice");
  return res;
}

bool verify_envelope_subfit(const FiniteJoinSemilattice& a) {
  auto res = build_envelope(a);
  return is_join_subfit(a) == is_join_subfit(res.sublattice.semilattice);
}

}  // namespace subfit
