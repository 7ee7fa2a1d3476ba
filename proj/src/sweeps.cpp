#include "subfit/sweeps.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "subfit/enumerate.hpp"

namespace subfit {

namespace {

struct InstanceOutcome {
  bool ok = true;
  std::string note;
  long long checks = 0;
  std::map<std::string, long long> counts;
};

template <typename Item, typename Fn>
SweepResult run_over(std::string name, const std::vector<Item>& items, int jobs, Fn&& fn) {
  SweepResult res;
  res.name = std::move(name);
  res.instances = static_cast<long long>(items.size());
  std::map<std::string, long long> counts;
  long long fail_index = -1;
  std::string fail_note;

  if (jobs <= 1) {
    for (size_t i = 0; i < items.size(); ++i) {
      InstanceOutcome out = fn(items[i]);
      res.checks += out.checks;
      for (auto& [k, v] : out.counts) counts[k] += v;
      if (!out.ok) {
        fail_index = static_cast<long long>(i);
        fail_note = out.note;
        break;
      }
    }
  } else {
    std::atomic<size_t> next{0};
    std::mutex mu;
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= items.size()) return;
        InstanceOutcome out = fn(items[i]);
        std::lock_guard<std::mutex> lock(mu);
        res.checks += out.checks;
        for (auto& [k, v] : out.counts) counts[k] += v;
        if (!out.ok && (fail_index < 0 || static_cast<long long>(i) < fail_index)) {
          fail_index = static_cast<long long>(i);
          fail_note = out.note;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& [k, v] : counts) res.counters.emplace_back(k, v);
  if (fail_index >= 0) {
    res.pass = false;
    std::ostringstream os;
    os << "instance #" << fail_index << ": " << fail_note;
    res.counterexample = os.str();
  }
  return res;
}

std::string describe_lattice(const FiniteLattice& l) {
  std::ostringstream os;
  os << "lattice n=" << l.n() << " covers=[";
  bool first = true;
  for (auto [a, b] : cover_pairs(l.poset())) {
    if (!first) os << " ";
    first = false;
    os << a << "<" << b;
  }
  os << "]";
  return os.str();
}

std::string describe_space(const FiniteSpace& x) {
  std::ostringstream os;
  os << "space n=" << x.points() << " covers=[";
  bool first = true;
  for (auto [a, b] : cover_pairs(x.spec)) {
    if (!first) os << " ";
    first = false;
    os << a << "<" << b;
  }
  os << "]";
  return os.str();
}

std::vector<FiniteSpace> all_spaces(int max_n) {
  std::vector<FiniteSpace> out;
  for (auto& p : enumerate_posets(max_n)) out.push_back(FiniteSpace{std::move(p)});
  return out;
}

}  // namespace

SweepResult sweep_subfit_ideal(int max_n, int jobs) {
  std::vector<FiniteLattice> items;
  for (auto& l : enumerate_lattices(max_n))
    if (is_distributive_lattice(l)) items.push_back(std::move(l));
  return run_over("subfit-ideal", items, jobs, [](const FiniteLattice& l) {
    InstanceOutcome out;
    if (!verify_subfit_ideal(l)) {
      out.ok = false;
      out.note = "subfit set is not an ideal in " + describe_lattice(l);
      return out;
    }
    ++out.checks;
    if (is_join_subfit(l.semilattice) != is_complemented(l)) {
      out.ok = false;
      out.note = "subfit/complemented oracle disagrees on " + describe_lattice(l);
      return out;
    }
    ++out.checks;
    int n = l.n(), top = l.top();
    auto downset_subfit = [&](int e) {
      return is_join_subfit(restrict_to_principal_downset(l.semilattice, e).sl);
    };
    std::vector<bool> sub(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e) sub[static_cast<size_t>(e)] = downset_subfit(e);
    for (int a = 0; a < n; ++a) {
      if (!sub[static_cast<size_t>(a)]) continue;
      for (int b = 0; b < n; ++b) {
        if (!sub[static_cast<size_t>(b)] || l.join_of(a, b) != top) continue;
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t) {
            if (l.le(t, s)) continue;
            auto w = subfit_join_witness(l, a, b, s, t);
            ++out.checks;
            ++out.counts[w.composite ? "branch-composite" : "branch-direct"];
            if (l.join_of(s, w.z) == top || l.join_of(t, w.z) != top) {
              out.ok = false;
              std::ostringstream os;
              os << "bad witness z=" << w.z << " for (a,b,s,t)=(" << a << "," << b << "," << s
                 << "," << t << ") in " << describe_lattice(l);
              out.note = os.str();
              return out;
            }
          }
      }
    }
    return out;
  });
}

SweepResult sweep_envelope(int max_n, int jobs) {
  auto items = enumerate_lattices(max_n);
  return run_over("envelope", items, jobs, [](const FiniteLattice& l) {
    InstanceOutcome out;
    const auto& a = l.semilattice;
    EnvelopeResult env;
    try {
      env = build_envelope(a);
    } catch (const Error& e) {
      out.ok = false;
      out.note = std::string(e.what()) + " on " + describe_lattice(l);
      return out;
    }
    ++out.checks;
    if (is_join_subfit(a) != is_join_subfit(env.sublattice.semilattice)) {
      out.ok = false;
      out.note = "subfitness not mirrored on " + describe_lattice(l);
      return out;
    }
    ++out.checks;
    if (is_distributive_lattice(l)) {
      if (!is_isomorphic(l.poset(), env.sublattice.poset())) {
        out.ok = false;
        out.note = "distributive input not reproduced on " + describe_lattice(l);
        return out;
      }
      ++out.checks;
      ++out.counts["distributive-identity"];
    }
    // exploratory: does enveloping commute with principal downsets?
    for (int e = 0; e < a.n(); ++e) {
      auto sub = restrict_to_principal_downset(a, e);
      auto sub_env = build_envelope(sub.sl);
      int le = env.sublattice.n();
      Mask below = 0;
      for (int i = 0; i < le; ++i)
        if (env.sublattice.le(i, env.embedding_table[static_cast<size_t>(e)])) below |= bit(i);
      auto down_in_l = restrict_poset(env.sublattice.poset(), below);
      if (!is_isomorphic(sub_env.sublattice.poset(), down_in_l.poset))
        ++out.counts["principal-gap"];
      ++out.checks;
    }
    return out;
  });
}

SweepResult sweep_patch_density(int max_n, int jobs) {
  return run_over("patch-density", all_spaces(max_n), jobs, [](const FiniteSpace& x) {
    InstanceOutcome out;
    out.checks = 1;
    if (!check_patch_density_criterion(x)) {
      out.ok = false;
      out.note = "criterion fails on " + describe_space(x);
    }
    return out;
  });
}

SweepResult sweep_regular_open(int max_n, int jobs) {
  return run_over("regular-open", all_spaces(max_n), jobs, [](const FiniteSpace& x) {
    InstanceOutcome out;
    out.checks = 1;
    if (!check_regular_open_criterion(x)) {
      out.ok = false;
      out.note = "criterion fails on " + describe_space(x);
    }
    return out;
  });
}

SweepResult sweep_density_union(int max_n, int jobs) {
  return run_over("union", all_spaces(max_n), jobs, [](const FiniteSpace& x) {
    InstanceOutcome out;
    auto opens = downset_masks(x.spec);
    for (Mask u : opens)
      for (Mask v : opens) {
        ++out.checks;
        if (!check_density_union(x, u, v)) {
          out.ok = false;
          std::ostringstream os;
          os << "union conclusion fails for U=" << u << " V=" << v << " in " << describe_space(x);
          out.note = os.str();
          return out;
        }
      }
    return out;
  });
}

SweepResult sweep_ideally_subfit(int max_n, int jobs) {
  auto items = enumerate_lattices(max_n);
  return run_over("ideal-subfit", items, jobs, [](const FiniteLattice& l) {
    InstanceOutcome out;
    const auto& a = l.semilattice;
    bool separation = is_join_subfit(a);
    ++out.checks;
    if (is_ideally_subfit(a) != separation) {
      out.ok = false;
      out.note = "ideal form disagrees on " + describe_lattice(l);
      return out;
    }
    bool directed = true;
    for (int u = 0; u < a.n() && directed; ++u)
      for (int v = 0; v < a.n(); ++v) {
        if (u == v || a.le(u, v)) continue;
        ++out.checks;
        if (!join_subfit_witness(a, u, v)) {
          directed = false;
          break;
        }
      }
    if (directed != separation) {
      out.ok = false;
      out.note = "separation and directed forms disagree on " + describe_lattice(l);
    }
    return out;
  });
}

SweepResult sweep_roundtrips(int lat_n, int space_n, int jobs) {
  SweepResult total;
  total.name = "roundtrip";
  std::vector<FiniteLattice> lats;
  for (auto& l : enumerate_lattices(lat_n))
    if (is_distributive_lattice(l)) lats.push_back(std::move(l));
  auto a = run_over("lattice-side", lats, jobs, [](const FiniteLattice& l) {
    InstanceOutcome out;
    out.checks = 1;
    auto x = birkhoff_space(l);
    if (!is_isomorphic(qcop(x).lattice.poset(), l.poset())) {
      out.ok = false;
      out.note = "lattice not reproduced: " + describe_lattice(l);
    }
    return out;
  });
  auto b = run_over("space-side", all_spaces(space_n), jobs, [](const FiniteSpace& x) {
    InstanceOutcome out;
    out.checks = 1;
    auto q = qcop(x);
    auto back = birkhoff_space(q.lattice);
    if (!is_isomorphic(back.spec, x.spec)) {
      out.ok = false;
      out.note = "space not reproduced: " + describe_space(x);
    }
    return out;
  });
  total.instances = a.instances + b.instances;
  total.checks = a.checks + b.checks;
  total.pass = a.pass && b.pass;
  total.counterexample = !a.pass ? a.counterexample : b.counterexample;
  return total;
}

SweepResult sweep_patch_discreteness(int max_n, int jobs) {
  return run_over("patch-discreteness", all_spaces(max_n), jobs, [](const FiniteSpace& x) {
    InstanceOutcome out;
    Mask universe = x.spec.all();
    for (Mask s = 0;; ++s) {
      ++out.checks;
      if (patch_closure(x, s) != s) {
        out.ok = false;
        std::ostringstream os;
        os << "patch closure moved set " << s << " in " << describe_space(x);
        out.note = os.str();
        return out;
      }
      if (s == universe) break;
    }
    return out;
  });
}

SweepResult sweep_three_way(int max_n, int jobs) {
  return run_over("three-way", all_spaces(max_n), jobs, [](const FiniteSpace& x) {
    InstanceOutcome out;
    auto q = qcop(x);
    bool subfit = is_join_subfit(q.lattice.semilattice);
    bool antichain = true;
    for (int i = 0; i < x.points() && antichain; ++i)
      if (x.spec.up[static_cast<size_t>(i)] != bit(i)) antichain = false;
    bool boolean = is_complemented(q.lattice);
    out.checks = 2;
    if (subfit != antichain || subfit != boolean) {
      out.ok = false;
      out.note = "three-way equivalence fails on " + describe_space(x);
      return out;
    }
    // every nonempty closed set contains a closed point
    Mask cp = closed_points(x);
    Mask universe = x.spec.all();
    for (Mask c = 1;; ++c) {
      if (is_upset(x.spec, c)) {
        ++out.checks;
        if ((c & cp) == 0) {
          out.ok = false;
          std::ostringstream os;
          os << "closed set " << c << " misses all closed points in " << describe_space(x);
          out.note = os.str();
          return out;
        }
      }
      if (c == universe) break;
    }
    return out;
  });
}

SweepResult sweep_relative_interior(int max_n, int jobs) {
  return run_over("relative-interior", all_spaces(max_n), jobs, [](const FiniteSpace& x) {
    InstanceOutcome out;
    auto opens = downset_masks(x.spec);
    for (Mask o1 : opens)
      for (Mask o2 : opens) {
        if (o1 & ~o2) continue;
        ++out.checks;
        if (!check_relative_patch_interior(x, o1, o2)) {
          out.ok = false;
          std::ostringstream os;
          os << "relative interior fails for O1=" << o1 << " O2=" << o2 << " in "
             << describe_space(x);
          out.note = os.str();
          return out;
        }
      }
    return out;
  });
}

}  // namespace subfit
