#include "subfit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace subfit {

namespace {

// Same refinement as the isomorphism test: colors are ranks of sorted
// signatures, hence comparable across posets.
std::vector<int> stable_colors(const FinitePoset& p) {
  int n = p.n;
  std::vector<int> color(static_cast<size_t>(n), 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sigs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<int> below, above;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (p.le(j, i)) below.push_back(color[static_cast<size_t>(j)]);
        if (p.le(i, j)) above.push_back(color[static_cast<size_t>(j)]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      auto& sig = sigs[static_cast<size_t>(i)];
      sig.push_back(color[static_cast<size_t>(i)]);
      sig.push_back(-1);
      sig.insert(sig.end(), below.begin(), below.end());
      sig.push_back(-2);
      sig.insert(sig.end(), above.begin(), above.end());
    }
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

struct CanonSearch {
  const FinitePoset* p = nullptr;
  int n = 0;
  std::vector<std::vector<int>> slots;  // elements grouped by color, class order fixed
  std::vector<int> perm;                // position -> element
  std::uint64_t best = ~std::uint64_t{0};

  void run(size_t class_idx, size_t within) {
    if (class_idx == slots.size()) {
      std::uint64_t key = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (p->le(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
            key |= std::uint64_t{1} << (i * n + j);
      best = std::min(best, key);
      return;
    }
    auto& cls = slots[class_idx];
    if (within == cls.size()) {
      run(class_idx + 1, 0);
      return;
    }
    for (size_t k = within; k < cls.size(); ++k) {
      std::swap(cls[within], cls[k]);
      perm.push_back(cls[within]);
      run(class_idx, within + 1);
      perm.pop_back();
      std::swap(cls[within], cls[k]);
    }
  }
};

}  // namespace

std::uint64_t canonical_key(const FinitePoset& p) {
  if (p.n > 8) throw Error(Errc::InvalidInput, "canonical key supports n <= 8");
  auto colors = stable_colors(p);
  std::map<int, std::vector<int>> by_color;
  for (int i = 0; i < p.n; ++i) by_color[colors[static_cast<size_t>(i)]].push_back(i);
  CanonSearch cs;
  cs.p = &p;
  cs.n = p.n;
  for (auto& [c, elems] : by_color) cs.slots.push_back(elems);
  cs.perm.reserve(static_cast<size_t>(p.n));
  cs.run(0, 0);
  return cs.best;
}

namespace {

struct GenState {
  int n = 0;
  std::vector<Mask> up, down;

  Mask universe() const { return n == 0 ? 0 : (bit(n) - 1); }

  FinitePoset to_poset() const {
    FinitePoset p;
    p.n = n;
    p.up = up;
    p.down = down;
    return p;
  }

  void push(Mask strict_down) {
    int k = n++;
    down.push_back(strict_down | bit(k));
    up.push_back(bit(k));
    for (Mask m = strict_down; m;) {
      int i = first_bit(m);
      m &= m - 1;
      up[static_cast<size_t>(i)] |= bit(k);
    }
  }

  void pop() {
    int k = --n;
    for (int i = 0; i < n; ++i) up[static_cast<size_t>(i)] &= ~bit(k);
    up.pop_back();
    down.pop_back();
  }

  bool downset_ok(Mask s) const {
    for (Mask m = s; m;) {
      int i = first_bit(m);
      m &= m - 1;
      if (down[static_cast<size_t>(i)] & ~s) return false;
    }
    return true;
  }
};

struct ClassSink {
  // per size: canonical keys seen, plus the kept representatives
  std::vector<std::unordered_set<std::uint64_t>> seen;
  std::vector<std::vector<FinitePoset>> reps;

  explicit ClassSink(int max_n)
      : seen(static_cast<size_t>(max_n) + 1), reps(static_cast<size_t>(max_n) + 1) {}

  void offer(const FinitePoset& p) {
    auto key = canonical_key(p);
    if (seen[static_cast<size_t>(p.n)].insert(key).second)
      reps[static_cast<size_t>(p.n)].push_back(p);
  }
};

void gen_posets(GenState& st, int max_n, ClassSink& sink) {
  if (st.n > 0) sink.offer(st.to_poset());
  if (st.n == max_n) return;
  Mask uni = st.universe();
  for (Mask d = 0;; ++d) {
    if (st.downset_ok(d)) {
      st.push(d);
      gen_posets(st, max_n, sink);
      st.pop();
    }
    if (d == uni) break;
  }
}

// Meets with all previous elements must exist the moment an element is
// added (lower sets never change later); joins are pruned as soon as a
// pair's upper-bound set is nonempty without a least member.
bool lattice_prunes_ok(const GenState& st, Mask strict_down) {
  int k = st.n - 1;
  for (int x = 0; x < k; ++x) {
    if (has(strict_down, x)) continue;
    Mask lbs = st.down[static_cast<size_t>(x)] & strict_down;
    if (lbs == 0) return false;  // no common lower bound with x at all
    bool found = false;
    for (Mask m = lbs; m && !found;) {
      int u = first_bit(m);
      m &= m - 1;
      if ((lbs & ~st.down[static_cast<size_t>(u)]) == 0) found = true;
    }
    if (!found) return false;
  }
  for (int x = 0; x < k; ++x) {
    if (!has(strict_down, x)) continue;
    for (int y = x + 1; y < k; ++y) {
      if (!has(strict_down, y)) continue;
      Mask ubs = st.up[static_cast<size_t>(x)] & st.up[static_cast<size_t>(y)];
      bool found = false;
      for (Mask m = ubs; m && !found;) {
        int u = first_bit(m);
        m &= m - 1;
        if ((ubs & ~st.up[static_cast<size_t>(u)]) == 0) found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

bool unique_maximal(const GenState& st) {
  int count = 0;
  for (int i = 0; i < st.n; ++i)
    if (st.up[static_cast<size_t>(i)] == bit(i)) ++count;
  return count == 1;
}

void gen_lattices(GenState& st, int max_n, ClassSink& sink) {
  if (st.n > 0 && unique_maximal(st)) sink.offer(st.to_poset());
  if (st.n == max_n) return;
  Mask uni = st.universe();
  if (st.n == 0) {
    st.push(0);
    gen_lattices(st, max_n, sink);
    st.pop();
    return;
  }
  for (Mask d = 1;; ++d) {  // strict downset nonempty: 0 stays the bottom
    if (st.downset_ok(d)) {
      st.push(d);
      if (lattice_prunes_ok(st, d)) gen_lattices(st, max_n, sink);
      st.pop();
    }
    if (d == uni) break;
  }
}

}  // namespace

std::vector<FinitePoset> enumerate_posets(int max_n) {
  if (max_n < 1 || max_n > 7)
    throw Error(Errc::InvalidInput, "poset enumeration supports 1..7 elements");
  GenState st;
  ClassSink sink(max_n);
  gen_posets(st, max_n, sink);
  std::vector<FinitePoset> out;
  for (auto& sized : sink.reps)
    for (auto& p : sized) out.push_back(std::move(p));
  return out;
}

std::vector<FiniteLattice> enumerate_lattices(int max_n) {
  if (max_n < 1 || max_n > 8)
    throw Error(Errc::InvalidInput, "lattice enumeration supports 1..8 elements");
  GenState st;
  ClassSink sink(max_n);
  gen_lattices(st, max_n, sink);
  std::vector<FiniteLattice> out;
  for (auto& sized : sink.reps)
    for (auto& p : sized) {
      auto l = try_lattice(p);
      if (!l) throw Error(Errc::PropertyCheckFailed, "generator produced a non-lattice");
      out.push_back(std::move(*l));
    }
  return out;
}

}  // namespace subfit
