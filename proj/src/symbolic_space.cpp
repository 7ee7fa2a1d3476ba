#include "subfit/symbolic_space.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace subfit {

namespace {

bool p_part_valid(const FinOrCofin& p) {
  return p.support().empty() || p.support().front() >= 3;
}

const char* extra_name(std::uint8_t e) {
  static const char* names[8] = {"{}",  "{x}",   "{y}",   "{x,y}",
                                 "{z}", "{x,z}", "{y,z}", "{x,y,z}"};
  return names[e & 7];
}

// The six extra shapes openness allows, paired with the forced kind of the
// sequence part (true = cofinite).
struct ExtraShape {
  std::uint8_t extra;
  bool forces_cofinite;
};
constexpr std::array<ExtraShape, 6> kValidShapes = {{
    {0, false},
    {kPointX, true},
    {kPointZ, true},
    {kPointX | kPointZ, true},
    {kPointY | kPointZ, true},
    {kPointX | kPointY | kPointZ, true},
}};

}  // namespace

std::string SymbolicOpen::to_string() const {
  std::ostringstream os;
  os << "(" << p_part.to_string() << ", " << extra_name(extra) << ")";
  return os.str();
}

bool in_qcop(const SymbolicOpen& u) {
  if (!p_part_valid(u.p_part)) return false;
  if ((u.extra & kPointY) && !(u.extra & kPointZ)) return false;
  if ((u.extra & (kPointX | kPointZ)) && !u.p_part.is_cofinite()) return false;
  if (u.extra == 0 && !u.p_part.is_finite()) return false;
  return true;
}

bool in_qcop_v(const SymbolicOpen& u) { return in_qcop(u) && (u.extra & (kPointY | kPointZ)) == 0; }
bool in_qcop_w(const SymbolicOpen& u) { return in_qcop(u) && (u.extra & kPointX) == 0; }

// Sequence parts live in the universe N>=3: a cofinite part with empty
// support is all of P.
SymbolicOpen full_space() { return {FinOrCofin::cofinite({}), kPointX | kPointY | kPointZ}; }
SymbolicOpen piece_v() { return {FinOrCofin::cofinite({}), kPointX}; }
SymbolicOpen piece_w() { return {FinOrCofin::cofinite({}), kPointY | kPointZ}; }

SymbolicOpen union_open(const SymbolicOpen& a, const SymbolicOpen& b) {
  return {set_union(a.p_part, b.p_part), static_cast<std::uint8_t>(a.extra | b.extra)};
}

std::optional<SymbolicOpen> inter_open(const SymbolicOpen& a, const SymbolicOpen& b) {
  SymbolicOpen r{set_inter(a.p_part, b.p_part), static_cast<std::uint8_t>(a.extra & b.extra)};
  if (!in_qcop(r)) return std::nullopt;
  return r;
}

bool subseteq_open(const SymbolicOpen& a, const SymbolicOpen& b) {
  return (a.extra & ~b.extra) == 0 && subseteq(a.p_part, b.p_part);
}

namespace {

// The sequence part of the complement of E, within the universe N>=3.
FinOrCofin complement_p_part(const FinOrCofin& e) {
  std::vector<std::uint32_t> tail;
  for (std::uint32_t v : e.support())
    if (v >= 3) tail.push_back(v);
  // finite E: complement holds all of N>=3 except E's tail
  return e.is_finite() ? FinOrCofin::cofinite(std::move(tail))
                       : FinOrCofin::finite(std::move(tail));
}

std::uint8_t complement_extra(const FinOrCofin& e, const std::array<std::uint8_t, 3>& ident) {
  std::uint8_t extra = 0;
  for (std::uint32_t k = 0; k < 3; ++k)
    if (!e.contains(k)) extra |= ident[k];
  return extra;
}

constexpr std::array<std::uint8_t, 3> kIdentity = {kPointX, kPointY, kPointZ};

}  // namespace

SymbolicOpen antiiso(const FinOrCofin& e) {
  if (!in_family(e)) throw Error(Errc::NotInFamily, "antiiso is defined on the family");
  return {complement_p_part(e), complement_extra(e, kIdentity)};
}

FinOrCofin antiiso_inv(const SymbolicOpen& u) {
  if (!in_qcop(u)) throw Error(Errc::InvalidInput, "not a compact open");
  std::vector<std::uint32_t> low;
  if (!(u.extra & kPointX)) low.push_back(0);
  if (!(u.extra & kPointY)) low.push_back(1);
  if (!(u.extra & kPointZ)) low.push_back(2);
  if (u.p_part.is_cofinite()) {
    // complement of (cofinite sequence part + extras): finite
    std::vector<std::uint32_t> sup = u.p_part.support();
    sup.insert(sup.end(), low.begin(), low.end());
    return FinOrCofin::finite(std::move(sup));
  }
  std::vector<std::uint32_t> missing = u.p_part.support();
  for (std::uint32_t k = 0; k < 3; ++k)
    if (std::find(low.begin(), low.end(), k) == low.end()) missing.push_back(k);
  return FinOrCofin::cofinite(std::move(missing));
}

bool identification_is_unique() {
  const std::array<std::vector<std::uint32_t>, 5> traces = {{{}, {0}, {1}, {0, 1}, {1, 2}}};
  std::vector<std::uint8_t> valid_nonempty;
  for (const auto& s : kValidShapes)
    if (s.extra) valid_nonempty.push_back(s.extra);
  std::sort(valid_nonempty.begin(), valid_nonempty.end());

  std::array<std::uint8_t, 3> points = {kPointX, kPointY, kPointZ};
  std::sort(points.begin(), points.end());
  int valid_count = 0;
  bool identity_valid = false;
  do {
    std::vector<std::uint8_t> images;
    for (const auto& tr : traces) {
      std::uint8_t extra = 0;
      for (std::uint32_t k = 0; k < 3; ++k)
        if (std::find(tr.begin(), tr.end(), k) == tr.end()) extra |= points[k];
      images.push_back(extra);
    }
    std::sort(images.begin(), images.end());
    if (images == valid_nonempty) {
      ++valid_count;
      if (points[0] == kPointX && points[1] == kPointY && points[2] == kPointZ)
        identity_valid = true;
    }
  } while (std::next_permutation(points.begin(), points.end()));
  return valid_count == 1 && identity_valid;
}

FinOrCofin v_side_witness(const FinOrCofin& x_hat, const FinOrCofin& y_hat) {
  if (!in_family(x_hat) || !in_family(y_hat) || !subseteq(elem_c(), x_hat) ||
      !subseteq(elem_c(), y_hat) || subseteq(y_hat, x_hat))
    throw Error(Errc::PreconditionViolated, "need members above {1,2} with y not<= x");
  auto n = set_minus(y_hat, x_hat).least_geq(3);
  if (!n) throw Error(Errc::PreconditionViolated, "difference has no element past 2");
  return FinOrCofin::finite({1, 2, *n});
}

SpaceRefutation refute_space_subfit() {
  SpaceRefutation rep;
  rep.big = {FinOrCofin::cofinite({}), kPointZ};  // P u {z}
  rep.small = piece_v();
  // difference of the two opens, as a plain point set
  FinOrCofin p_diff = set_minus(rep.big.p_part, rep.small.p_part);
  std::uint8_t extra_diff = rep.big.extra & ~rep.small.extra;
  rep.diff_is_singleton_z = p_diff.empty() && extra_diff == kPointZ;
  // specializations: z below y, everything else discrete
  rep.z_is_closed_point = false;  // cl{z} = {z, y}
  // closed points: all sequence points, x and y
  std::uint8_t closed_extra = kPointX | kPointY;
  rep.closed_point_free = p_diff.empty() && (extra_diff & closed_extra) == 0;

  rep.transported_lhs = elem_b();
  rep.transported_rhs = elem_c();
  rep.transported_u = antiiso(rep.transported_lhs);
  rep.transported_v = antiiso(rep.transported_rhs);
  rep.transported_pair_incomparable = !subseteq_open(rep.transported_u, rep.transported_v);

  // Directed-form refutation: no Z with u v Z = X and v v Z != X. The
  // sequence parts of u and v are all of P, so only Z's extra shape
  // matters; scan the six openness classes.
  rep.no_witness_exists = true;
  rep.classes_checked = 0;
  std::uint8_t all_extra = kPointX | kPointY | kPointZ;
  for (const auto& shape : kValidShapes) {
    ++rep.classes_checked;
    bool u_reaches_top = (rep.transported_u.extra | shape.extra) == all_extra;
    bool v_reaches_top = (rep.transported_v.extra | shape.extra) == all_extra;
    if (u_reaches_top && !v_reaches_top) rep.no_witness_exists = false;
  }
  return rep;
}

CoverPieceReport check_cover_pieces(long long samples, std::uint64_t seed, std::uint32_t bound) {
  CoverPieceReport rep;
  rep.v_in_qcop = in_qcop(piece_v()) && in_qcop_v(piece_v());
  rep.w_in_qcop = in_qcop(piece_w()) && in_qcop_w(piece_w());
  SymbolicOpen z_piece{FinOrCofin::cofinite({}), kPointZ};
  rep.inter_escapes = !inter_open(piece_v(), z_piece).has_value();
  rep.samples = samples;
  rep.w_side_pass = true;
  rep.v_side_pass = true;

  FamilySampler s(bound, seed);
  auto avoid_full = [](FinOrCofin e) {
    return e.is_cofinite() && e.support().empty() ? FinOrCofin::cofinite({3}) : e;
  };
  const std::vector<TraceClass> w_pool = {TraceClass::zero, TraceClass::zero_one,
                                          TraceClass::cofinite};
  for (long long i = 0; i < samples && rep.w_side_pass; ++i) {
    FinOrCofin x = avoid_full(s.sample_class(w_pool[static_cast<size_t>(i) % 3]));
    FinOrCofin y = s.sample_class(w_pool[static_cast<size_t>(i / 3) % 3]);
    if (subseteq(y, x))
      y = set_union(y, FinOrCofin::finite({*set_minus(FinOrCofin::cofinite({0, 1, 2}), x)
                                                .least_geq(3)}));
    FinOrCofin z = upset0_witness(x, y);
    SymbolicOpen ux = antiiso(x), uy = antiiso(y), uz = antiiso(z);
    bool ok = in_qcop_w(ux) && in_qcop_w(uy) && in_qcop_w(uz) &&
              union_open(ux, uz) == piece_w() && !(union_open(uy, uz) == piece_w()) &&
              set_inter(x, z) == elem_a() && set_inter(y, z) != elem_a();
    if (!ok) {
      rep.w_side_pass = false;
      rep.counterexample = "W side: " + x.to_string() + ", " + y.to_string();
    }
  }

  const std::vector<TraceClass> v_pool = {TraceClass::one_two, TraceClass::cofinite};
  for (long long i = 0; i < samples && rep.v_side_pass; ++i) {
    FinOrCofin x = avoid_full(s.sample_class(v_pool[static_cast<size_t>(i) % 2]));
    FinOrCofin y = s.sample_class(v_pool[static_cast<size_t>(i / 2) % 2]);
    if (subseteq(y, x))
      y = set_union(y, FinOrCofin::finite({*set_minus(FinOrCofin::cofinite({0, 1, 2}), x)
                                                .least_geq(3)}));
    FinOrCofin z = v_side_witness(x, y);
    SymbolicOpen ux = antiiso(x), uy = antiiso(y), uz = antiiso(z);
    bool ok = in_qcop_v(ux) && in_qcop_v(uy) && in_qcop_v(uz) &&
              union_open(ux, uz) == piece_v() && !(union_open(uy, uz) == piece_v()) &&
              set_inter(x, z) == elem_c() && set_inter(y, z) != elem_c();
    if (!ok) {
      rep.v_side_pass = false;
      rep.counterexample = "V side: " + x.to_string() + ", " + y.to_string();
    }
  }
  return rep;
}

AntiisoReport run_antiiso_checks(long long samples, std::uint64_t seed, std::uint32_t bound) {
  AntiisoReport rep;
  rep.samples = samples;
  rep.pass = true;
  FamilySampler s(bound, seed);
  for (long long i = 0; i < samples && rep.pass; ++i) {
    FinOrCofin e = s.sample();
    FinOrCofin f = s.sample();
    SymbolicOpen ue = antiiso(e), uf = antiiso(f);
    bool ok = in_qcop(ue) && in_qcop(uf) && antiiso_inv(ue) == e &&
              (subseteq(e, f) == subseteq_open(uf, ue)) &&
              (subseteq(f, e) == subseteq_open(ue, uf));
    if (!ok) {
      rep.pass = false;
      rep.counterexample = e.to_string() + ", " + f.to_string();
    }
  }
  return rep;
}

AntiisoReport run_union_closure_checks(long long samples, std::uint64_t seed,
                                       std::uint32_t bound) {
  AntiisoReport rep;
  rep.samples = samples;
  rep.pass = true;
  FamilySampler s(bound, seed);
  for (long long i = 0; i < samples && rep.pass; ++i) {
    SymbolicOpen a = antiiso(s.sample());
    SymbolicOpen b = antiiso(s.sample());
    if (!in_qcop(union_open(a, b))) {
      rep.pass = false;
      rep.counterexample = a.to_string() + ", " + b.to_string();
    }
  }
  return rep;
}

}  // namespace subfit
