#include "subfit/counterexample.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace subfit {

namespace {

std::uint8_t trace_bits(const FinOrCofin& e) {
  std::uint8_t t = 0;
  for (std::uint32_t k = 0; k < 3; ++k)
    if (e.contains(k)) t |= static_cast<std::uint8_t>(1u << k);
  return t;
}

std::optional<TraceClass> class_of_bits(std::uint8_t t) {
  switch (t) {
    case 0b000: return TraceClass::none;
    case 0b001: return TraceClass::zero;
    case 0b010: return TraceClass::one;
    case 0b011: return TraceClass::zero_one;
    case 0b110: return TraceClass::one_two;
    default: return std::nullopt;  // {2}, {0,2}, {0,1,2} are outside
  }
}

std::vector<std::uint32_t> class_trace(TraceClass c) {
  switch (c) {
    case TraceClass::none: return {};
    case TraceClass::zero: return {0};
    case TraceClass::one: return {1};
    case TraceClass::zero_one: return {0, 1};
    case TraceClass::one_two: return {1, 2};
    case TraceClass::cofinite: return {0, 1, 2};  // guaranteed members
  }
  return {};
}

const FinOrCofin& all_ge3() {
  static const FinOrCofin s = FinOrCofin::cofinite({0, 1, 2});
  return s;
}

// x' = {0,1,2} u (N>=3 \ other) u self u z, the cofinite correction used
// whenever self u z would leave the family.
FinOrCofin cofinite_fix(const FinOrCofin& self, const FinOrCofin& other, const FinOrCofin& z) {
  FinOrCofin out = FinOrCofin::finite({0, 1, 2});
  out = set_union(out, set_minus(all_ge3(), other));
  out = set_union(out, self);
  return set_union(out, z);
}

}  // namespace

const char* trace_class_name(TraceClass c) {
  switch (c) {
    case TraceClass::none: return "empty-trace";
    case TraceClass::zero: return "trace-0";
    case TraceClass::one: return "trace-1";
    case TraceClass::zero_one: return "trace-01";
    case TraceClass::one_two: return "trace-12";
    case TraceClass::cofinite: return "cofinite";
  }
  return "?";
}

std::optional<TraceClass> family_class(const FinOrCofin& e) {
  if (e.is_cofinite())
    return trace_bits(e) == 0b111 ? std::optional<TraceClass>{TraceClass::cofinite} : std::nullopt;
  return class_of_bits(trace_bits(e));
}

bool in_family(const FinOrCofin& e) { return family_class(e).has_value(); }

bool in_lattice_closure(const FinOrCofin& e) {
  if (in_family(e)) return true;
  return e.is_finite() && trace_bits(e) == 0b111;
}

FinOrCofin family_meet(const FinOrCofin& a, const FinOrCofin& b) {
  if (!in_family(a) || !in_family(b))
    throw Error(Errc::NotInFamily, "meet arguments must lie in the family");
  FinOrCofin r = set_inter(a, b);
  if (!in_family(r)) throw Error(Errc::PropertyCheckFailed, "family not closed under meet");
  return r;
}

FinOrCofin elem_a() { return FinOrCofin::finite({0}); }
FinOrCofin elem_b() { return FinOrCofin::finite({1}); }
FinOrCofin elem_c() { return FinOrCofin::finite({1, 2}); }

FinOrCofin upset0_witness(const FinOrCofin& x, const FinOrCofin& y) {
  if (!in_family(x) || !in_family(y) || !x.contains(0) || !y.contains(0) || subseteq(y, x))
    throw Error(Errc::PreconditionViolated, "need x, y above {0} with y not<= x");
  FinOrCofin diff = set_minus(y, x);
  std::uint32_t n = *diff.least_geq(0);
  if (n != 2) return FinOrCofin::finite({0, n});
  // n = 2 forces y cofinite and x finite, so the difference reaches past 2.
  std::uint32_t m = *diff.least_geq(3);
  return FinOrCofin::finite({0, m});
}

FinOrCofin upset1_witness(const FinOrCofin& x, const FinOrCofin& y) {
  if (!in_family(x) || !in_family(y) || !x.contains(1) || !y.contains(1) || subseteq(y, x))
    throw Error(Errc::PreconditionViolated, "need x, y above {1} with y not<= x");
  std::uint32_t n = *set_minus(y, x).least_geq(0);
  return FinOrCofin::finite({1, n});
}

RefutationReport meet_subfit_refutation() {
  RefutationReport rep;
  rep.lhs = elem_b();   // contains 1, not 2
  rep.rhs = elem_c();   // {1,2}
  for (std::uint8_t sub = 0; sub < 4; ++sub) {
    std::vector<std::uint32_t> sup;
    if (sub & 1) sup.push_back(1);
    if (sub & 2) sup.push_back(2);
    FinOrCofin e = FinOrCofin::finite(sup);
    if (in_family(e)) rep.below_rhs.push_back(e);
  }
  // A separating z needs lhs ^ z = {} and rhs ^ z != {}. Both meets only
  // see z's members among {1,2}, which the trace class determines, so six
  // class checks decide the question for every z.
  rep.classes_checked = 0;
  rep.witness_exists = false;
  for (TraceClass c : {TraceClass::none, TraceClass::zero, TraceClass::one, TraceClass::zero_one,
                       TraceClass::one_two, TraceClass::cofinite}) {
    ++rep.classes_checked;
    auto tr = class_trace(c);
    bool has1 = std::find(tr.begin(), tr.end(), 1u) != tr.end();
    bool has2 = std::find(tr.begin(), tr.end(), 2u) != tr.end();
    bool lhs_meet_empty = !has1;
    bool rhs_meet_nonempty = has1 || has2;
    if (lhs_meet_empty && rhs_meet_nonempty) rep.witness_exists = true;
  }
  return rep;
}

namespace {

TraceClass bad_partner(TraceClass z_class) {
  // union with z escapes the family exactly for this class
  return z_class == TraceClass::zero_one ? TraceClass::one_two : TraceClass::zero_one;
}

std::pair<FinOrCofin, FinOrCofin> distrib_witness_impl(const FinOrCofin& x, const FinOrCofin& y,
                                                       const FinOrCofin& z, bool whole_family,
                                                       std::string* case_tag) {
  auto cx = family_class(x), cy = family_class(y), cz = family_class(z);
  if (!cx || !cy || !cz || !subseteq(set_inter(x, y), z))
    throw Error(Errc::PreconditionViolated, "need family members with x ^ y <= z");
  if (!whole_family && (!x.contains(1) || !y.contains(1) || !z.contains(1)))
    throw Error(Errc::PreconditionViolated, "all three must lie above {1}");

  std::string label;
  if (whole_family) {
    switch (*cz) {
      case TraceClass::none:
      case TraceClass::one:
      case TraceClass::cofinite: label = "i"; break;
      case TraceClass::zero: label = "ii"; break;
      case TraceClass::zero_one: label = "iii"; break;
      case TraceClass::one_two: label = "iv"; break;
    }
  } else {
    label = (*cz == TraceClass::one || *cz == TraceClass::cofinite) ? "a" : "b";
  }

  auto finish = [&](std::pair<FinOrCofin, FinOrCofin> out, const std::string& tag) {
    if (case_tag) *case_tag = tag;
    return out;
  };

  // Unions with z stay in the family except against one specific class.
  bool simple = label == "i" || label == "a";
  bool x_bad = false, y_bad = false;
  if (!simple) {
    if (whole_family && *cz == TraceClass::one_two) {
      x_bad = (*cx == TraceClass::zero || *cx == TraceClass::zero_one);
      y_bad = (*cy == TraceClass::zero || *cy == TraceClass::zero_one);
    } else if (whole_family && (*cz == TraceClass::zero || *cz == TraceClass::zero_one)) {
      x_bad = (*cx == TraceClass::one_two);
      y_bad = (*cy == TraceClass::one_two);
    } else {
      TraceClass bad = bad_partner(*cz);
      x_bad = (*cx == bad);
      y_bad = (*cy == bad);
    }
    if (x_bad && y_bad)
      throw Error(Errc::PreconditionViolated, "x ^ y <= z rules out two clashing sides");
  }

  if (simple) return finish({set_union(x, z), set_union(y, z)}, label);
  if (x_bad) return finish({cofinite_fix(x, y, z), set_union(y, z)}, label + "-fix-left");
  if (y_bad) return finish({set_union(x, z), cofinite_fix(y, x, z)}, label + "-fix-right");
  return finish({set_union(x, z), set_union(y, z)}, label + "-union");
}

}  // namespace

std::pair<FinOrCofin, FinOrCofin> upset1_distrib_witness(const FinOrCofin& x, const FinOrCofin& y,
                                                         const FinOrCofin& z,
                                                         std::string* case_tag) {
  return distrib_witness_impl(x, y, z, false, case_tag);
}

std::pair<FinOrCofin, FinOrCofin> family_distrib_witness(const FinOrCofin& x, const FinOrCofin& y,
                                                         const FinOrCofin& z,
                                                         std::string* case_tag) {
  return distrib_witness_impl(x, y, z, true, case_tag);
}

FamilySampler::FamilySampler(std::uint32_t bound, std::uint64_t seed) : bound_(bound), rng_(seed) {
  if (bound < 4) throw Error(Errc::InvalidInput, "sampling bound must be at least 4");
}

std::vector<std::uint32_t> FamilySampler::sample_tail() {
  std::uniform_int_distribution<int> size_dist(0, 6);
  std::uniform_int_distribution<std::uint32_t> val_dist(3, bound_);
  int k = size_dist(rng_);
  std::vector<std::uint32_t> tail;
  for (int i = 0; i < k; ++i) tail.push_back(val_dist(rng_));
  return tail;
}

FinOrCofin FamilySampler::sample_class(TraceClass c) {
  auto tail = sample_tail();
  if (c == TraceClass::cofinite) return FinOrCofin::cofinite(tail);
  auto tr = class_trace(c);
  tail.insert(tail.end(), tr.begin(), tr.end());
  return FinOrCofin::finite(tail);
}

FinOrCofin FamilySampler::sample() {
  std::uniform_int_distribution<int> dist(0, kTraceClassCount - 1);
  return sample_class(static_cast<TraceClass>(dist(rng_)));
}

FinOrCofin FamilySampler::sample_superset(const FinOrCofin& base, TraceClass c) {
  if (c == TraceClass::cofinite) {
    std::vector<std::uint32_t> missing;
    for (std::uint32_t v : sample_tail())
      if (!base.contains(v)) missing.push_back(v);
    return set_union(base, FinOrCofin::cofinite(missing));
  }
  auto tr = class_trace(c);
  auto tail = sample_tail();
  tail.insert(tail.end(), tr.begin(), tr.end());
  FinOrCofin out = set_union(base, FinOrCofin::finite(tail));
  if (family_class(out) != c)
    throw Error(Errc::InvalidInput, "base trace incompatible with requested class");
  return out;
}

namespace {

using Tuple = std::vector<FinOrCofin>;
using FailCheck = std::function<bool(const Tuple&)>;  // true = still failing

std::string describe(const Tuple& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ", ";
    os << t[i].to_string();
  }
  return os.str();
}

// Drop support elements, then downgrade traces, keeping the failure alive.
Tuple shrink(Tuple t, const FailCheck& fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < t.size(); ++i) {
      const auto& sup = t[i].support();
      for (size_t k = 0; k < sup.size(); ++k) {
        std::vector<std::uint32_t> smaller;
        for (size_t j = 0; j < sup.size(); ++j)
          if (j != k) smaller.push_back(sup[j]);
        Tuple cand = t;
        cand[i] = t[i].is_finite() ? FinOrCofin::finite(smaller) : FinOrCofin::cofinite(smaller);
        if (fails(cand)) {
          t = std::move(cand);
          changed = true;
          break;
        }
      }
      if (changed) break;
      for (TraceClass c : {TraceClass::none, TraceClass::zero, TraceClass::one,
                           TraceClass::zero_one, TraceClass::one_two}) {
        Tuple cand = t;
        cand[i] = FinOrCofin::finite(class_trace(c));
        if (cand[i] != t[i] && fails(cand)) {
          t = std::move(cand);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return t;
}

struct Runner {
  ClaimOutcome out;
  std::vector<std::pair<std::string, long long>>& counts() { return out.case_counts; }

  void bump(const std::string& key) {
    for (auto& [k, v] : out.case_counts)
      if (k == key) {
        ++v;
        return;
      }
    out.case_counts.emplace_back(key, 1);
  }

  void fail(Tuple inputs, const FailCheck& fails) {
    out.pass = false;
    out.counterexample = describe(shrink(std::move(inputs), fails));
  }
};

// The full set admits no y with y not<= x; dent it before pairing.
FinOrCofin avoid_full(FinOrCofin x) {
  if (x.is_cofinite() && x.support().empty()) return FinOrCofin::cofinite({3});
  return x;
}

FinOrCofin force_not_subset(const FinOrCofin& x, FinOrCofin y) {
  if (!subseteq(y, x)) return y;
  std::uint32_t m = *set_minus(all_ge3(), x).least_geq(3);
  return set_union(y, FinOrCofin::finite({m}));
}

const std::vector<TraceClass> kUpset1Classes = {TraceClass::one, TraceClass::zero_one,
                                                TraceClass::one_two, TraceClass::cofinite};
const std::vector<TraceClass> kAllClasses = {TraceClass::none,     TraceClass::zero,
                                             TraceClass::one,      TraceClass::zero_one,
                                             TraceClass::one_two,  TraceClass::cofinite};

std::vector<TraceClass> compatible_targets(const std::vector<TraceClass>& pool,
                                           const FinOrCofin& base) {
  std::vector<TraceClass> out;
  for (TraceClass c : pool) {
    if (c == TraceClass::cofinite) {
      out.push_back(c);
      continue;
    }
    if (base.is_cofinite()) continue;  // only a cofinite class can cover it
    auto tr = class_trace(c);
    bool ok = true;
    for (std::uint32_t k = 0; k < 3; ++k) {
      bool in_base = base.contains(k);
      bool in_tr = std::find(tr.begin(), tr.end(), k) != tr.end();
      if (in_base && !in_tr) ok = false;
    }
    if (ok) out.push_back(c);
  }
  return out;
}

ClaimOutcome run_pair_claim(int which, long long samples, std::uint64_t seed,
                            std::uint32_t bound) {
  Runner r;
  r.out.claim = which;
  r.out.samples = samples;
  r.out.pass = true;
  FamilySampler s(bound, seed);
  const bool zero_side = which == 1;
  const std::vector<TraceClass> pool =
      zero_side ? std::vector<TraceClass>{TraceClass::zero, TraceClass::zero_one,
                                          TraceClass::cofinite}
                : kUpset1Classes;
  FinOrCofin base = zero_side ? elem_a() : elem_b();
  std::uint32_t anchor = zero_side ? 0 : 1;
  auto check = [&](const Tuple& t) {
    const auto& x = t[0];
    const auto& y = t[1];
    FinOrCofin z = zero_side ? upset0_witness(x, y) : upset1_witness(x, y);
    return in_family(z) && z.contains(anchor) && set_inter(x, z) == base &&
           set_inter(y, z) != base;
  };
  for (long long i = 0; i < samples && r.out.pass; ++i) {
    FinOrCofin x = avoid_full(s.sample_class(pool[static_cast<size_t>(i) % pool.size()]));
    FinOrCofin y = s.sample_class(pool[static_cast<size_t>(i / pool.size()) % pool.size()]);
    y = force_not_subset(x, y);
    std::uint32_t least = *set_minus(y, x).least_geq(0);
    r.bump(zero_side && least == 2 ? "cofinite-step" : "direct");
    Tuple t{x, y};
    bool ok;
    try {
      ok = check(t);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) {
      auto still_fails = [&](const Tuple& c) {
        if (c.size() != 2) return false;
        if (!in_family(c[0]) || !in_family(c[1])) return false;
        if (!c[0].contains(anchor) || !c[1].contains(anchor) || subseteq(c[1], c[0]))
          return false;
        try {
          return !check(c);
        } catch (const Error&) {
          return false;
        }
      };
      r.fail(t, still_fails);
    }
  }
  return r.out;
}

ClaimOutcome run_triple_claim(int which, long long samples, std::uint64_t seed,
                              std::uint32_t bound) {
  Runner r;
  r.out.claim = which;
  r.out.samples = samples;
  r.out.pass = true;
  FamilySampler s(bound, seed);
  const bool whole = which == 6;
  const std::vector<TraceClass>& pool = whole ? kAllClasses : kUpset1Classes;
  auto check = [&](const Tuple& t, std::string* tag) {
    auto [x2, y2] = whole ? family_distrib_witness(t[0], t[1], t[2], tag)
                          : upset1_distrib_witness(t[0], t[1], t[2], tag);
    bool members = whole ? (in_family(x2) && in_family(y2))
                         : (in_family(x2) && in_family(y2) && x2.contains(1) && y2.contains(1));
    return members && subseteq(t[0], x2) && subseteq(t[1], y2) && set_inter(x2, y2) == t[2];
  };
  for (long long i = 0; i < samples && r.out.pass; ++i) {
    size_t np = pool.size();
    FinOrCofin x = s.sample_class(pool[static_cast<size_t>(i) % np]);
    FinOrCofin y = s.sample_class(pool[static_cast<size_t>(i / np) % np]);
    FinOrCofin base = set_inter(x, y);
    auto targets = compatible_targets(pool, base);
    // z cycles slowest so every (x, y, z)-class combination occurs
    FinOrCofin z =
        s.sample_superset(base, targets[static_cast<size_t>(i / (np * np)) % targets.size()]);
    Tuple t{x, y, z};
    std::string tag;
    bool ok;
    try {
      ok = check(t, &tag);
    } catch (const Error&) {
      ok = false;
    }
    if (ok) {
      r.bump(tag);
    } else {
      auto still_fails = [&](const Tuple& c) {
        if (c.size() != 3) return false;
        try {
          return !check(c, nullptr);
        } catch (const Error&) {
          return false;
        }
      };
      r.fail(t, still_fails);
    }
  }
  return r.out;
}

ClaimOutcome run_closure_claim(long long samples, std::uint64_t seed, std::uint32_t bound) {
  // lattice-closure of the upset of {0} inside P(N): unions and meets stay
  Runner r;
  r.out.claim = 4;
  r.out.samples = samples;
  r.out.pass = true;
  FamilySampler s(bound, seed);
  std::array<TraceClass, 3> pool = {TraceClass::zero, TraceClass::zero_one, TraceClass::cofinite};
  for (long long i = 0; i < samples && r.out.pass; ++i) {
    FinOrCofin x = s.sample_class(pool[static_cast<size_t>(i) % pool.size()]);
    FinOrCofin y = s.sample_class(pool[static_cast<size_t>(i / pool.size()) % pool.size()]);
    FinOrCofin u = set_union(x, y), m = set_inter(x, y);
    r.bump("pair");
    bool ok = in_family(u) && u.contains(0) && in_family(m) && m.contains(0);
    if (!ok) {
      auto still_fails = [&](const Tuple& c) {
        if (c.size() != 2 || !in_family(c[0]) || !in_family(c[1])) return false;
        if (!c[0].contains(0) || !c[1].contains(0)) return false;
        FinOrCofin cu = set_union(c[0], c[1]), cm = set_inter(c[0], c[1]);
        return !(in_family(cu) && cu.contains(0) && in_family(cm) && cm.contains(0));
      };
      r.fail({x, y}, still_fails);
    }
  }
  return r.out;
}

}  // namespace

ClaimOutcome run_claim(int which, long long samples, std::uint64_t seed, std::uint32_t bound) {
  switch (which) {
    case 1:
    case 2:
      return run_pair_claim(which, samples, seed, bound);
    case 3: {
      ClaimOutcome out;
      out.claim = 3;
      out.samples = 0;
      auto rep = meet_subfit_refutation();
      std::vector<FinOrCofin> expect = {FinOrCofin::finite({}), elem_b(), elem_c()};
      out.pass = !rep.witness_exists && rep.classes_checked == kTraceClassCount &&
                 rep.below_rhs == expect;
      out.case_counts.emplace_back("classes", rep.classes_checked);
      if (!out.pass) out.counterexample = "refutation report inconsistent";
      return out;
    }
    case 4:
      return run_closure_claim(samples, seed, bound);
    case 5:
    case 6:
      return run_triple_claim(which, samples, seed, bound);
    default:
      throw Error(Errc::InvalidInput, "claims are numbered 1..6");
  }
}

ClaimOutcome run_meet_closure(long long samples, std::uint64_t seed, std::uint32_t bound) {
  Runner r;
  r.out.claim = 0;
  r.out.samples = samples;
  r.out.pass = true;
  FamilySampler s(bound, seed);
  for (long long i = 0; i < samples && r.out.pass; ++i) {
    FinOrCofin x = s.sample();
    FinOrCofin y = s.sample();
    r.bump(std::string("meet/") + trace_class_name(*family_class(x)));
    try {
      FinOrCofin m = family_meet(x, y);
      if (!in_family(m)) throw Error(Errc::PropertyCheckFailed, "escaped");
    } catch (const Error&) {
      auto still_fails = [&](const Tuple& c) {
        if (c.size() != 2 || !in_family(c[0]) || !in_family(c[1])) return false;
        return !in_family(set_inter(c[0], c[1]));
      };
      r.fail({x, y}, still_fails);
    }
  }
  return r.out;
}

}  // namespace subfit
