#include "subfit/poset.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace subfit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::MissingTop: return "MissingTop";
    case Errc::MissingBottom: return "MissingBottom";
    case Errc::NotComparable: return "NotComparable";
    case Errc::NotDistributive: return "NotDistributive";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotAnEmbedding: return "NotAnEmbedding";
    case Errc::ConditionsNotMet: return "ConditionsNotMet";
    case Errc::PropertyCheckFailed: return "PropertyCheckFailed";
    case Errc::NotInFamily: return "NotInFamily";
    case Errc::NotOpen: return "NotOpen";
    case Errc::BadInclusion: return "BadInclusion";
  }
  return "UnknownError";
}

namespace {

void fill_down_from_up(FinitePoset& p) {
  p.down.assign(static_cast<size_t>(p.n), 0);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (has(p.up[static_cast<size_t>(i)], j)) p.down[static_cast<size_t>(j)] |= bit(i);
}

}  // namespace

FinitePoset poset_from_cover_pairs(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n < 1 || n > kMaxElements)
    throw Error(Errc::InvalidInput, "element count must be in [1, 64]");
  FinitePoset p;
  p.n = n;
  p.up.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) p.up[static_cast<size_t>(i)] = bit(i);
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(Errc::InvalidInput, "cover index out of range");
    if (a == b) throw Error(Errc::CycleDetected, "self-loop in cover relation");
    p.up[static_cast<size_t>(a)] |= bit(b);
  }
  // Warshall closure on bit rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (has(p.up[static_cast<size_t>(i)], k)) p.up[static_cast<size_t>(i)] |= p.up[static_cast<size_t>(k)];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.le(i, j) && p.le(j, i))
        throw Error(Errc::CycleDetected, "relation closure is not antisymmetric");
  fill_down_from_up(p);
  return p;
}

FinitePoset poset_from_up_rows(int n, const std::vector<Mask>& up_rows) {
  if (n < 1 || n > kMaxElements || static_cast<int>(up_rows.size()) != n)
    throw Error(Errc::InvalidInput, "bad row count");
  FinitePoset p;
  p.n = n;
  p.up = up_rows;
  Mask universe = p.all();
  for (int i = 0; i < n; ++i) {
    if (p.up[static_cast<size_t>(i)] & ~universe)
      throw Error(Errc::InvalidInput, "relation row exceeds universe");
    if (!p.le(i, i)) throw Error(Errc::InvalidInput, "relation not reflexive");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.le(i, j)) {
        if (i != j && p.le(j, i)) throw Error(Errc::InvalidInput, "relation not antisymmetric");
        if (p.up[static_cast<size_t>(j)] & ~p.up[static_cast<size_t>(i)])
          throw Error(Errc::InvalidInput, "relation not transitive");
      }
  fill_down_from_up(p);
  return p;
}

FinitePoset dual(const FinitePoset& p) {
  FinitePoset d;
  d.n = p.n;
  d.up = p.down;
  d.down = p.up;
  return d;
}

std::vector<std::pair<int, int>> cover_pairs(const FinitePoset& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      if (i == j || !p.le(i, j)) continue;
      // strictly-between elements: above i, below j, distinct from both
      Mask between = p.up[static_cast<size_t>(i)] & p.down[static_cast<size_t>(j)] & ~bit(i) & ~bit(j);
      if (between == 0) out.emplace_back(i, j);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Restriction restrict_poset(const FinitePoset& p, Mask keep) {
  Restriction r;
  r.to_local.assign(static_cast<size_t>(p.n), -1);
  for (int i = 0; i < p.n; ++i)
    if (has(keep, i)) {
      r.to_local[static_cast<size_t>(i)] = static_cast<int>(r.to_global.size());
      r.to_global.push_back(i);
    }
  int m = static_cast<int>(r.to_global.size());
  if (m == 0) throw Error(Errc::InvalidInput, "empty restriction");
  r.poset.n = m;
  r.poset.up.assign(static_cast<size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.le(r.to_global[static_cast<size_t>(a)], r.to_global[static_cast<size_t>(b)]))
        r.poset.up[static_cast<size_t>(a)] |= bit(b);
  fill_down_from_up(r.poset);
  return r;
}

bool is_downset(const FinitePoset& p, Mask s) {
  for (int i = 0; i < p.n; ++i)
    if (has(s, i) && (p.down[static_cast<size_t>(i)] & ~s)) return false;
  return true;
}

bool is_upset(const FinitePoset& p, Mask s) {
  for (int i = 0; i < p.n; ++i)
    if (has(s, i) && (p.up[static_cast<size_t>(i)] & ~s)) return false;
  return true;
}

std::vector<Mask> downset_masks(const FinitePoset& p) {
  if (p.n > 24) throw Error(Errc::InvalidInput, "downset enumeration capped at 24 elements");
  std::vector<Mask> out;
  Mask universe = p.all();
  for (Mask s = 0;; ++s) {
    if (is_downset(p, s)) out.push_back(s);
    if (s == universe) break;
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

namespace {

// Iterated neighborhood refinement: the color of an element combines its
// previous color with the color multisets of its strict down- and up-sets.
std::vector<int> refine_colors(const FinitePoset& p) {
  int n = p.n;
  std::vector<int> color(static_cast<size_t>(n), 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sigs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<int> sig;
      sig.push_back(color[static_cast<size_t>(i)]);
      std::vector<int> below, above;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (p.le(j, i)) below.push_back(color[static_cast<size_t>(j)]);
        if (p.le(i, j)) above.push_back(color[static_cast<size_t>(j)]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig.push_back(-1);
      sig.insert(sig.end(), below.begin(), below.end());
      sig.push_back(-2);
      sig.insert(sig.end(), above.begin(), above.end());
      sigs[static_cast<size_t>(i)] = std::move(sig);
    }
    // New color = rank of the signature among sorted distinct signatures, so
    // colors are comparable between different posets.
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sigs) rank.emplace(s, 0);
    int next_id = 0;
    for (auto& [sig, id] : rank) id = next_id++;
    std::vector<int> next(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) next[static_cast<size_t>(i)] = rank.at(sigs[static_cast<size_t>(i)]);
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

bool extend_iso(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& cp,
                const std::vector<int>& cq, std::vector<int>& map, Mask& used, int i) {
  int n = p.n;
  if (i == n) return true;
  for (int j = 0; j < n; ++j) {
    if (has(used, j) || cq[static_cast<size_t>(j)] != cp[static_cast<size_t>(i)]) continue;
    bool ok = true;
    for (int k = 0; k < i && ok; ++k) {
      int jk = map[static_cast<size_t>(k)];
      if (p.le(i, k) != q.le(j, jk) || p.le(k, i) != q.le(jk, j)) ok = false;
    }
    if (!ok) continue;
    map[static_cast<size_t>(i)] = j;
    used |= bit(j);
    if (extend_iso(p, q, cp, cq, map, used, i + 1)) return true;
    used &= ~bit(j);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  if (p.n != q.n) return std::nullopt;
  int total_p = 0, total_q = 0;
  for (int i = 0; i < p.n; ++i) {
    total_p += popcount(p.up[static_cast<size_t>(i)]);
    total_q += popcount(q.up[static_cast<size_t>(i)]);
  }
  if (total_p != total_q) return std::nullopt;
  auto cp = refine_colors(p);
  auto cq = refine_colors(q);
  auto hist = [](const std::vector<int>& c) {
    std::vector<int> h = c;
    std::sort(h.begin(), h.end());
    return h;
  };
  if (hist(cp) != hist(cq)) return std::nullopt;
  std::vector<int> map(static_cast<size_t>(p.n), -1);
  Mask used = 0;
  if (extend_iso(p, q, cp, cq, map, used, 0)) return map;
  return std::nullopt;
}

bool is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  return find_isomorphism(p, q).has_value();
}

}  // namespace subfit
