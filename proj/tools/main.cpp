// subfit: structural checks, witnesses, envelopes, duality round trips and
// exhaustive theorem sweeps over finite and symbolic (semi)lattices.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subfit/counterexample.hpp"
#include "subfit/enumerate.hpp"
#include "subfit/envelope.hpp"
#include "subfit/json_io.hpp"
#include "subfit/space.hpp"
#include "subfit/subfitness.hpp"
#include "subfit/sweeps.hpp"
#include "subfit/symbolic_space.hpp"

namespace {

using subfit::ojson;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kDefaultSeed = 1729;

struct Emit {
  bool pretty = false;
  void operator()(const ojson& j) const {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
  }
};

ojson make_report(const std::string& command, ojson inputs, ojson results, ojson counterexample,
                  Clock::time_point t0) {
  ojson rep;
  rep["command"] = command;
  rep["inputs"] = std::move(inputs);
  rep["results"] = std::move(results);
  rep["counterexample"] = std::move(counterexample);
  rep["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return rep;
}

ojson input_digest(const std::string& path) {
  ojson j;
  j["path"] = path;
  j["digest"] = subfit::file_digest(path);
  return j;
}

std::string label_of(const subfit::PosetFile& pf, int idx) {
  if (pf.labels) return (*pf.labels)[static_cast<size_t>(idx)];
  return std::to_string(idx);
}

int resolve_element(const subfit::PosetFile& pf, const std::string& token) {
  if (pf.labels)
    for (size_t i = 0; i < pf.labels->size(); ++i)
      if ((*pf.labels)[i] == token) return static_cast<int>(i);
  try {
    size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos == token.size() && v >= 0 && v < pf.poset.n) return v;
  } catch (...) {
  }
  throw subfit::Error(subfit::Errc::InvalidInput, "cannot resolve element '" + token + "'");
}

ojson mask_to_json(const subfit::PosetFile& pf, subfit::Mask m) {
  ojson arr = ojson::array();
  for (int i = 0; i < pf.poset.n; ++i)
    if (subfit::has(m, i)) arr.push_back(label_of(pf, i));
  return arr;
}

ojson sweep_to_json(const subfit::SweepResult& r) {
  ojson j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["instances"] = r.instances;
  j["checks"] = r.checks;
  ojson counters = ojson::object();
  for (const auto& [k, v] : r.counters) counters[k] = v;
  j["counters"] = std::move(counters);
  return j;
}

ojson claim_to_json(const subfit::ClaimOutcome& c) {
  ojson j;
  j["claim"] = c.claim;
  j["pass"] = c.pass;
  j["samples"] = c.samples;
  ojson cases = ojson::object();
  for (const auto& [k, v] : c.case_counts) cases[k] = v;
  j["cases"] = std::move(cases);
  if (!c.pass) j["counterexample"] = c.counterexample;
  return j;
}

int cmd_check(const std::string& path, const Emit& emit) {
  auto t0 = Clock::now();
  auto pf = subfit::load_poset_file(path);
  ojson res;
  res["n"] = pf.poset.n;
  res["poset"] = true;
  auto js = subfit::try_join_semilattice(pf.poset);
  auto lat = subfit::try_lattice(pf.poset);
  res["join_semilattice"] = js.has_value();
  res["lattice"] = lat.has_value();
  if (js) {
    res["bounded"] = js->bounded();
    res["distributive_join_semilattice"] = subfit::is_distributive_join_semilattice(*js);
    res["join_subfit"] = subfit::is_join_subfit(*js);
    res["ideally_subfit"] = subfit::is_ideally_subfit(*js);
  } else {
    res["bounded"] = nullptr;
    res["distributive_join_semilattice"] = nullptr;
    res["join_subfit"] = nullptr;
    res["ideally_subfit"] = nullptr;
  }
  if (lat) {
    res["distributive_lattice"] = subfit::is_distributive_lattice(*lat);
    res["meet_subfit"] = subfit::is_meet_subfit(*lat);
  } else {
    res["distributive_lattice"] = nullptr;
    res["meet_subfit"] = nullptr;
  }
  emit(make_report("check", input_digest(path), res, nullptr, t0));
  return 0;
}

int cmd_subfit_elements(const std::string& path, const Emit& emit) {
  auto t0 = Clock::now();
  auto pf = subfit::load_poset_file(path);
  auto js = subfit::try_join_semilattice(pf.poset);
  if (!js) throw subfit::Error(subfit::Errc::InvalidInput, "input is not a join-semilattice");
  auto rep = subfit::subfit_elements(*js);
  ojson res;
  res["subfit_set"] = mask_to_json(pf, rep.subfit_set);
  res["is_downset"] = rep.is_downset;
  res["is_ideal"] = rep.is_ideal;
  if (rep.offending_pair) {
    res["offending_pair"] =
        ojson::array({label_of(pf, rep.offending_pair->first),
                      label_of(pf, rep.offending_pair->second)});
  } else {
    res["offending_pair"] = nullptr;
  }
  emit(make_report("subfit-elements", input_digest(path), res, nullptr, t0));
  return 0;
}

int cmd_witness(const std::string& path, const std::string& a, const std::string& b,
                const std::string& s, const std::string& t, const Emit& emit) {
  auto t0 = Clock::now();
  auto pf = subfit::load_poset_file(path);
  auto lat = subfit::try_lattice(pf.poset);
  if (!lat) throw subfit::Error(subfit::Errc::InvalidInput, "input is not a lattice");
  int ia = resolve_element(pf, a), ib = resolve_element(pf, b);
  int is = resolve_element(pf, s), it = resolve_element(pf, t);
  ojson inputs = input_digest(path);
  inputs["a"] = label_of(pf, ia);
  inputs["b"] = label_of(pf, ib);
  inputs["s"] = label_of(pf, is);
  inputs["t"] = label_of(pf, it);
  ojson res;
  ojson counterexample = nullptr;
  int code = 0;
  try {
    auto w = subfit::subfit_join_witness(*lat, ia, ib, is, it);
    bool post1 = lat->join_of(is, w.z) != lat->top();
    bool post2 = lat->join_of(it, w.z) == lat->top();
    res["z"] = label_of(pf, w.z);
    res["branch"] = w.composite ? "composite" : "direct";
    res["s_join_z_below_top"] = post1;
    res["t_join_z_is_top"] = post2;
    res["pass"] = post1 && post2;
    if (!(post1 && post2)) code = 1;
  } catch (const subfit::Error& e) {
    if (e.code() != subfit::Errc::PropertyCheckFailed) throw;
    res["pass"] = false;
    counterexample = e.what();
    code = 1;
  }
  emit(make_report("witness", inputs, res, counterexample, t0));
  return code;
}

int cmd_envelope(const std::string& path, const Emit& emit) {
  auto t0 = Clock::now();
  auto pf = subfit::load_poset_file(path);
  auto js = subfit::try_join_semilattice(pf.poset);
  if (!js) throw subfit::Error(subfit::Errc::InvalidInput, "input is not a join-semilattice");
  ojson res;
  ojson counterexample = nullptr;
  int code = 0;
  try {
    auto env = subfit::build_envelope(*js);
    bool sub_a = subfit::is_join_subfit(*js);
    bool sub_l = subfit::is_join_subfit(env.sublattice.semilattice);
    res["size_a"] = js->n();
    res["size_envelope"] = env.envelope.n();
    res["size_sublattice"] = env.sublattice.n();
    res["join_subfit_a"] = sub_a;
    res["join_subfit_sublattice"] = sub_l;
    res["meet_approximation"] = env.conditions.meet_approx;
    res["admissible_inf_agreement"] = env.conditions.inf_agreement;
    res["mirrored"] = sub_a == sub_l;
    res["pass"] = sub_a == sub_l;
    if (sub_a != sub_l) {
      counterexample = "subfitness differs between the semilattice and its envelope sublattice";
      code = 1;
    }
  } catch (const subfit::Error& e) {
    if (e.code() != subfit::Errc::PropertyCheckFailed) throw;
    res["pass"] = false;
    counterexample = e.what();
    code = 1;
  }
  emit(make_report("envelope", input_digest(path), res, counterexample, t0));
  return code;
}

int cmd_dualize(const std::string& path, const Emit& emit) {
  auto t0 = Clock::now();
  auto pf = subfit::load_poset_file(path);
  auto lat = subfit::try_lattice(pf.poset);
  if (!lat) throw subfit::Error(subfit::Errc::InvalidInput, "input is not a lattice");
  auto space = subfit::birkhoff_space(*lat);
  auto back = subfit::qcop(space);
  bool roundtrip = subfit::is_isomorphic(back.lattice.poset(), lat->poset());
  ojson res;
  res["points"] = space.points();
  res["space"] = subfit::poset_to_json(space.spec);
  res["opens"] = back.lattice.n();
  res["roundtrip_ok"] = roundtrip;
  res["pass"] = roundtrip;
  ojson counterexample = nullptr;
  if (!roundtrip) counterexample = "opens lattice of the dual space is not isomorphic to input";
  emit(make_report("dualize", input_digest(path), res, counterexample, t0));
  return roundtrip ? 0 : 1;
}

int cmd_enumerate(int max_n, const std::string& verify, int jobs, const Emit& emit) {
  auto t0 = Clock::now();
  subfit::SweepResult r;
  if (verify == "subfit-ideal") {
    r = subfit::sweep_subfit_ideal(max_n, jobs);
  } else if (verify == "envelope") {
    r = subfit::sweep_envelope(max_n, jobs);
  } else if (verify == "patch-density") {
    r = subfit::sweep_patch_density(max_n, jobs);
  } else if (verify == "regular-open") {
    r = subfit::sweep_regular_open(max_n, jobs);
  } else if (verify == "union") {
    r = subfit::sweep_density_union(max_n, jobs);
  } else if (verify == "ideal-subfit") {
    r = subfit::sweep_ideally_subfit(max_n, jobs);
  } else if (verify == "roundtrip") {
    r = subfit::sweep_roundtrips(max_n, std::min(max_n, 6), jobs);
  } else if (verify == "discreteness") {
    r = subfit::sweep_patch_discreteness(max_n, jobs);
  } else if (verify == "three-way") {
    r = subfit::sweep_three_way(max_n, jobs);
  } else if (verify == "relative-interior") {
    r = subfit::sweep_relative_interior(max_n, jobs);
  } else {
    throw subfit::Error(subfit::Errc::InvalidInput, "unknown sweep '" + verify + "'");
  }
  ojson inputs;
  inputs["max_n"] = max_n;
  inputs["verify"] = verify;
  inputs["jobs"] = jobs;
  ojson counterexample = r.pass ? ojson(nullptr) : ojson(r.counterexample);
  emit(make_report("enumerate", inputs, sweep_to_json(r), counterexample, t0));
  return r.pass ? 0 : 1;
}

int cmd_space_check(int max_n, int jobs, const Emit& emit) {
  auto t0 = Clock::now();
  std::vector<subfit::SweepResult> rs;
  rs.push_back(subfit::sweep_patch_density(max_n, jobs));
  rs.push_back(subfit::sweep_regular_open(max_n, jobs));
  rs.push_back(subfit::sweep_density_union(std::min(max_n, 5), jobs));
  rs.push_back(subfit::sweep_patch_discreteness(max_n, jobs));
  rs.push_back(subfit::sweep_three_way(max_n, jobs));
  rs.push_back(subfit::sweep_roundtrips(std::min(max_n + 1, 7), max_n, jobs));
  rs.push_back(subfit::sweep_relative_interior(std::min(max_n, 5), jobs));
  ojson res;
  bool pass = true;
  ojson counterexample = nullptr;
  for (const auto& r : rs) {
    res[r.name] = sweep_to_json(r);
    if (!r.pass && pass) {
      pass = false;
      counterexample = r.counterexample;
    }
  }
  res["pass"] = pass;
  ojson inputs;
  inputs["max_n"] = max_n;
  inputs["jobs"] = jobs;
  emit(make_report("space-check", inputs, res, counterexample, t0));
  return pass ? 0 : 1;
}

int cmd_counterexample(const std::string& claims, long long samples, std::uint64_t seed,
                       std::uint32_t bound, bool space, const Emit& emit) {
  auto t0 = Clock::now();
  std::vector<int> which;
  std::stringstream ss(claims);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int c = 0;
    try {
      c = std::stoi(tok);
    } catch (...) {
      throw subfit::Error(subfit::Errc::InvalidInput, "bad claim token '" + tok + "'");
    }
    if (c < 1 || c > 6)
      throw subfit::Error(subfit::Errc::InvalidInput, "claims are numbered 1..6");
    which.push_back(c);
  }
  bool pass = true;
  ojson res;
  ojson counterexample = nullptr;
  ojson claim_arr = ojson::array();
  for (int c : which) {
    auto out = subfit::run_claim(c, samples, seed, bound);
    claim_arr.push_back(claim_to_json(out));
    if (!out.pass && pass) {
      pass = false;
      counterexample = out.counterexample;
    }
  }
  res["claims"] = std::move(claim_arr);
  if (!which.empty()) {
    auto mc = subfit::run_meet_closure(samples * 10, seed, bound);
    ojson j = claim_to_json(mc);
    j.erase("claim");
    res["meet_closure"] = std::move(j);
    if (!mc.pass && pass) {
      pass = false;
      counterexample = mc.counterexample;
    }
  }
  if (space) {
    ojson sp;
    auto rf = subfit::refute_space_subfit();
    sp["pieces_in_qcop"] = ojson::array(
        {subfit::in_qcop(subfit::piece_v()), subfit::in_qcop(subfit::piece_w())});
    sp["patch_open_difference"] = rf.big.to_string() + " \\ " + rf.small.to_string();
    sp["difference_is_singleton_z"] = rf.diff_is_singleton_z;
    sp["z_is_closed_point"] = rf.z_is_closed_point;
    sp["difference_closed_point_free"] = rf.closed_point_free;
    sp["transported_pair"] =
        ojson::array({rf.transported_u.to_string(), rf.transported_v.to_string()});
    sp["transported_refutation"] = rf.no_witness_exists;
    sp["classes_checked"] = rf.classes_checked;
    auto cover = subfit::check_cover_pieces(samples, seed, bound);
    sp["intersection_escapes_qcop"] = cover.inter_escapes;
    sp["w_side_witnesses"] = cover.w_side_pass;
    sp["v_side_witnesses"] = cover.v_side_pass;
    auto ai = subfit::run_antiiso_checks(samples, seed, bound);
    sp["antiiso_order_reversal"] = ai.pass;
    auto uc = subfit::run_union_closure_checks(samples, seed, bound);
    sp["union_closure"] = uc.pass;
    sp["identification_unique"] = subfit::identification_is_unique();
    bool space_pass = rf.diff_is_singleton_z && !rf.z_is_closed_point && rf.closed_point_free &&
                      rf.no_witness_exists && cover.inter_escapes && cover.v_in_qcop &&
                      cover.w_in_qcop && cover.w_side_pass && cover.v_side_pass && ai.pass &&
                      uc.pass;
    sp["pass"] = space_pass;
    res["space"] = std::move(sp);
    if (!space_pass && pass) {
      pass = false;
      counterexample = "space suite failed";
    }
  }
  res["pass"] = pass;
  ojson inputs;
  inputs["claims"] = claims;
  inputs["samples"] = samples;
  inputs["seed"] = seed;
  inputs["bound"] = bound;
  inputs["space"] = space;
  emit(make_report("counterexample", inputs, res, counterexample, t0));
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural and exhaustive checks for subfitness in finite and symbolic "
               "(semi)lattices"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string file, a, b, s, t;
  int max_n = 6, jobs = 1;
  std::string verify;
  std::string claims = "1,2,3,4,5,6";
  long long samples = 10000;
  std::uint64_t seed = kDefaultSeed;
  std::uint32_t bound = 30;
  bool space = false;

  auto* c_check = app.add_subcommand("check", "structural predicates for one poset file");
  c_check->add_option("file", file)->required();

  auto* c_sub = app.add_subcommand("subfit-elements", "the set of subfit elements and its flags");
  c_sub->add_option("file", file)->required();

  auto* c_wit = app.add_subcommand("witness", "composing subfitness witness on a lattice");
  c_wit->add_option("file", file)->required();
  c_wit->add_option("-a", a, "first subfit element")->required();
  c_wit->add_option("-b", b, "second subfit element")->required();
  c_wit->add_option("-s", s, "element to keep below the top")->required();
  c_wit->add_option("-t", t, "element to push to the top")->required();

  auto* c_env = app.add_subcommand("envelope", "distributive envelope and subfitness mirror");
  c_env->add_option("file", file)->required();

  auto* c_dual = app.add_subcommand("dualize", "space of a distributive lattice + round trip");
  c_dual->add_option("file", file)->required();

  auto* c_enum = app.add_subcommand("enumerate", "exhaustive sweeps over enumerated instances");
  c_enum->add_option("--max-n", max_n, "largest instance size")->default_val(6);
  c_enum
      ->add_option("--verify", verify,
                   "subfit-ideal | envelope | patch-density | regular-open | union | "
                   "ideal-subfit | roundtrip | discreteness | three-way | relative-interior")
      ->required();
  c_enum->add_option("--jobs", jobs, "parallel workers")->default_val(1);

  auto* c_space = app.add_subcommand("space-check", "all finite-space sweeps");
  c_space->add_option("--max-n", max_n)->default_val(6);
  c_space->add_option("--jobs", jobs)->default_val(1);

  auto* c_cx = app.add_subcommand("counterexample", "sampled and exact checks of the "
                                                    "finite/cofinite counterexample family");
  c_cx->add_option("--claims", claims, "comma list of claim numbers")->default_val("1,2,3,4,5,6");
  c_cx->add_option("--samples", samples)->default_val(10000);
  c_cx->add_option("--seed", seed)->default_val(kDefaultSeed);
  c_cx->add_option("--bound", bound, "largest support element used by the sampler")
      ->default_val(30);
  c_cx->add_flag("--space", space, "also run the symbolic-space suite");

  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Emit emit{pretty};
  try {
    if (c_check->parsed()) return cmd_check(file, emit);
    if (c_sub->parsed()) return cmd_subfit_elements(file, emit);
    if (c_wit->parsed()) return cmd_witness(file, a, b, s, t, emit);
    if (c_env->parsed()) return cmd_envelope(file, emit);
    if (c_dual->parsed()) return cmd_dualize(file, emit);
    if (c_enum->parsed()) return cmd_enumerate(max_n, verify, jobs, emit);
    if (c_space->parsed()) return cmd_space_check(max_n, jobs, emit);
    if (c_cx->parsed()) return cmd_counterexample(claims, samples, seed, bound, space, emit);
  } catch (const subfit::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == subfit::Errc::PropertyCheckFailed ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
