#include "listagree/harness.hpp"

#include "listagree/agreement_oracle.hpp"
#include "listagree/chains.hpp"
#include "listagree/coboundary_test.hpp"
#include "listagree/direct_sum.hpp"
#include "listagree/error.hpp"
#include "listagree/expansion.hpp"
#include "listagree/generators.hpp"
#include "listagree/list_agreement.hpp"
#include "listagree/serialization.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

namespace listagree {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSeedRule = "splitmix64(master_seed + trial_index) seeds mt19937_64 per trial";

std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct Builder {
  Report& r;
  void value(const std::string& name, const std::string& v) { r.values.emplace_back(name, v); }
  void value(const std::string& name, const Rational& v) { value(name, to_string(v)); }
  void value(const std::string& name, std::uint64_t v) { value(name, std::to_string(v)); }
  void value(const std::string& name, bool v) { value(name, std::string(v ? "true" : "false")); }
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    r.checks.push_back({name, ok ? "pass" : "fail", detail});
  }
  void skip(const std::string& name, const std::string& detail) { r.checks.push_back({name, "skipped", detail}); }
};

GlobalFunction all_vertices(const SimplicialComplex& X) {
  const std::size_t n = X.count(0);
  return n >= 64 ? ~0ULL : (1ULL << n) - 1;
}

// The agreement oracle enumerates multisets of l globals; refuse when that is far too slow.
std::optional<std::string> agreement_oracle_refusal(const SimplicialComplex& X, int l) {
  if (X.count(0) > 10 || l > 3) return "needs |X(0)| <= 10 and l <= 3";
  double multisets = 1;
  const double g = static_cast<double>(1ULL << X.count(0));
  for (int i = 0; i < l; ++i) multisets = multisets * (g + i) / (i + 1);
  if (multisets > 5e7) return "multiset enumeration too large";
  return std::nullopt;
}

void add_trial(Report& r, std::uint64_t master, std::uint64_t t, const ShotOutcome& o) {
  r.trials.push_back({t, trial_seed(master, t), o.accepted, o.branch, o.reads.entry_reads, o.reads.face_reads,
                      o.reads.underlying_reads});
}

void monte_carlo_values(Builder& b, const MonteCarloSummary& s) {
  b.value("trial_seed_rule", std::string(kSeedRule));
  b.value("trials", s.trials);
  b.value("rejections", s.rejections);
  b.value("rejection_estimate", fmt(s.estimate));
  b.value("rejection_ci95_low", fmt(s.ci_low));
  b.value("rejection_ci95_high", fmt(s.ci_high));
  b.value("max_face_reads", s.max_reads.face_reads);
  b.value("max_entry_reads", s.max_reads.entry_reads);
  b.value("max_underlying_reads", s.max_reads.underlying_reads);
}

// Exact probability inside a wide Wilson interval (z = 3.89, two-sided 1e-4).
void check_estimate(Builder& b, const MonteCarloSummary& s, const Rational& exact) {
  const auto [lo, hi] = wilson_interval(s.rejections, s.trials, 3.89);
  const double p = exact.convert_to<double>();
  b.check("exact_within_wide_interval", lo <= p && p <= hi, fmt(lo) + " <= " + fmt(p) + " <= " + fmt(hi));
}

LAssignment l_input(const ExperimentConfig& c, const ComplexPtr& X, Rng& rng, Builder& b) {
  if (c.input == "file") return l_assignment_from_json(read_text_file(c.input_path), X);
  if (c.input != "agreeing" && c.input != "corrupted") throw Error(ErrorKind::InvalidParams, "unknown input kind " + c.input);
  LAssignment F = random_agreeing_l_assignment(X, c.k, c.l, rng, true);
  if (c.input == "corrupted") {
    const std::size_t face = rng.below(F.face_count());
    const int slot = static_cast<int>(rng.below(static_cast<std::uint64_t>(c.l)));
    F.set_entry(face, slot, F.entry(face, slot) ^ 1u);
    b.value("corrupted_face", std::to_string(face));
    b.value("corrupted_slot", std::to_string(slot));
  }
  return F;
}

FaceFunction ds_input(const ExperimentConfig& c, const ComplexPtr& X, Rng& rng, Builder& b) {
  if (c.input == "file") return face_function_from_json(read_text_file(c.input_path), X);
  if (c.input != "agreeing" && c.input != "corrupted") throw Error(ErrorKind::InvalidParams, "unknown input kind " + c.input);
  const GlobalFunction f = rng.next() & all_vertices(*X);
  FaceFunction F = eval_direct_sum(X, f, c.k);
  b.value("origin_function", std::to_string(f));
  if (c.input == "corrupted") {
    const std::size_t face = rng.below(F.size());
    F.values[face] ^= 1;
    b.value("corrupted_face", std::to_string(face));
  }
  return F;
}

Cochain cochain_input(const ExperimentConfig& c, const RepPtr& R, const GroupPtr& G, Rng& rng, Builder& b) {
  if (c.input == "file") return cochain_from_json(read_text_file(c.input_path), R->complex_ptr());
  if (c.input != "agreeing" && c.input != "corrupted") throw Error(ErrorKind::InvalidParams, "unknown input kind " + c.input);
  Cochain f = apply_coboundary(random_cochain(R->complex_ptr(), G, 0, rng));
  if (c.input == "corrupted") {
    const std::size_t e = rng.below(f.size());
    const auto shift = 1 + rng.below(G->order() - 1);
    f.set(e, static_cast<Element>((f.at(e) + shift) % G->order()));
    b.value("corrupted_edge", std::to_string(e));
  }
  return f;
}

void run_list_agreement(const ExperimentConfig& c, const ComplexPtr& X, Builder& b) {
  const RepPtr R = RepresentationComplex::build(X, c.k);
  const auto Sl = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(c.l));
  Rng rng(c.seed);
  const LAssignment F = l_input(c, X, rng, b);
  const bool tld = is_two_locally_differing(F);
  b.value("two_locally_differing", tld);
  const AgreementReport exact = list_agreement_exact(F, *R);
  if (c.mode == "exact") {
    b.value("rejection", exact.rejection);
    b.value("eps_full", exact.triangle.eps_full);
    b.value("eps_empty", exact.triangle.eps_empty);
    b.value("inadequate_norm", exact.inadequate_norm);
    b.value("ambiguous_seen", exact.ambiguous_seen);
    if (c.input == "agreeing") b.check("agreeing_input_accepted", exact.rejection == 0, to_string(exact.rejection));
    if (const auto refusal = agreement_oracle_refusal(*X, F.l())) {
      b.skip("rejects_iff_not_agreeing", *refusal);
      return;
    }
    const OracleResult oracle = dist_to_agreeing_oracle(F);
    b.value("oracle_distance", oracle.distance);
    if (oracle.distance > 0) b.value("rejection_over_distance", Rational(exact.rejection / oracle.distance));
    if (tld) b.check("rejects_iff_not_agreeing", (exact.rejection == 0) == (oracle.distance == 0));
    else b.skip("rejects_iff_not_agreeing", "input is not 2-locally-differing");
    return;
  }
  const LAssignmentSource source(F);
  if (c.mode == "shot") {
    Rng shot_rng(trial_seed(c.seed, 0));
    const ShotOutcome o = list_agreement_shot(source, *R, *Sl, shot_rng);
    b.value("trial_seed_rule", std::string(kSeedRule));
    b.value("accepted", o.accepted);
    add_trial(b.r, c.seed, 0, o);
    b.check("reads_within_budget", o.reads.face_reads <= 3, std::to_string(o.reads.face_reads) + " face reads");
    return;
  }
  if (c.mode != "monte-carlo") throw Error(ErrorKind::InvalidParams, "unknown mode " + c.mode);
  const MonteCarloSummary s = list_agreement_monte_carlo(source, *R, *Sl, c.trials, c.seed, c.workers);
  monte_carlo_values(b, s);
  b.value("exact_rejection", exact.rejection);
  for (std::uint64_t t = 0; t < s.trials; ++t) add_trial(b.r, c.seed, t, s.outcomes[t]);
  b.check("reads_within_budget", s.max_reads.face_reads <= 3, std::to_string(s.max_reads.face_reads) + " face reads");
  check_estimate(b, s, exact.rejection);
}

void run_direct_sum(const ExperimentConfig& c, const ComplexPtr& X, Builder& b) {
  const RepPtr R = RepresentationComplex::build(X, c.k);
  Rng rng(c.seed);
  const FaceFunction F = ds_input(c, X, rng, b);
  const int l = F.k % 2 ? 1 : 2;
  const auto Sl = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(l));
  b.value("list_length", std::to_string(l));
  const AgreementReport exact = direct_sum_test_exact(F, *R);
  const std::uint64_t budget = 3 * static_cast<std::uint64_t>(F.k + 1);
  if (c.mode == "exact") {
    b.value("rejection", exact.rejection);
    if (c.input == "agreeing") b.check("genuine_direct_sum_accepted", exact.rejection == 0, to_string(exact.rejection));
    if (X->count(0) > 16) {
      b.skip("distance_bounded_by_list_distance", "direct-sum oracle needs |X(0)| <= 16");
      return;
    }
    const auto ds = dist_to_direct_sums_oracle(F);
    b.value("direct_sum_distance", ds.distance);
    b.value("nearest_origin_count", static_cast<std::uint64_t>(ds.nearest.size()));
    if (const auto refusal = agreement_oracle_refusal(*X, l)) {
      b.skip("distance_bounded_by_list_distance", *refusal);
      return;
    }
    const auto la = dist_to_agreeing_oracle(induced_l_assignment(F));
    b.value("induced_list_distance", la.distance);
    b.check("distance_bounded_by_list_distance", ds.distance <= la.distance,
            to_string(ds.distance) + " <= " + to_string(la.distance));
    return;
  }
  const DirectSumSource source(F);
  if (c.mode == "shot") {
    Rng shot_rng(trial_seed(c.seed, 0));
    const ShotOutcome o = list_agreement_shot(source, *R, *Sl, shot_rng);
    b.value("trial_seed_rule", std::string(kSeedRule));
    b.value("accepted", o.accepted);
    add_trial(b.r, c.seed, 0, o);
    b.check("reads_within_budget", o.reads.underlying_reads <= budget, std::to_string(o.reads.underlying_reads) + " reads");
    return;
  }
  if (c.mode != "monte-carlo") throw Error(ErrorKind::InvalidParams, "unknown mode " + c.mode);
  const MonteCarloSummary s = list_agreement_monte_carlo(source, *R, *Sl, c.trials, c.seed, c.workers);
  monte_carlo_values(b, s);
  b.value("exact_rejection", exact.rejection);
  for (std::uint64_t t = 0; t < s.trials; ++t) add_trial(b.r, c.seed, t, s.outcomes[t]);
  b.check("reads_within_budget", s.max_reads.underlying_reads <= budget,
          std::to_string(s.max_reads.underlying_reads) + " reads");
  check_estimate(b, s, exact.rejection);
}

void run_coboundary(const ExperimentConfig& c, const ComplexPtr& X, Builder& b) {
  const RepPtr R = RepresentationComplex::build(X, c.k);
  const auto G = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(c.l));
  Rng rng(c.seed);
  const Cochain f = cochain_input(c, R, G, rng, b);
  const TriangleViolations tv = empty_triangle_test_exact(f, *R);
  if (c.mode == "shot" || c.mode == "monte-carlo") {
    const EdgeOracle oracle = [&f](Vertex u, Vertex v) { return f.value(u, v); };
    const std::uint64_t trials = c.mode == "shot" ? 1 : c.trials;
    std::uint64_t rejections = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng trial_rng(trial_seed(c.seed, t));
      ShotOutcome o;
      o.accepted = empty_triangle_test_once(*R, *G, oracle, trial_rng);
      o.reads.entry_reads = 3;
      o.reads.face_reads = 3;
      rejections += !o.accepted;
      add_trial(b.r, c.seed, t, o);
    }
    b.value("trial_seed_rule", std::string(kSeedRule));
    b.value("trials", trials);
    b.value("rejections", rejections);
    b.value("exact_rejection", tv.rejection);
    if (c.mode == "monte-carlo") {
      MonteCarloSummary s;
      s.trials = trials;
      s.rejections = rejections;
      check_estimate(b, s, tv.rejection);
    }
    return;
  }
  if (c.mode != "exact") throw Error(ErrorKind::InvalidParams, "unknown mode " + c.mode);
  b.value("eps_full", tv.eps_full);
  b.value("eps_empty", tv.eps_empty);
  b.value("rejection", tv.rejection);
  if (c.input == "agreeing") b.check("coboundary_accepted", tv.rejection == 0, to_string(tv.rejection));
  std::optional<Rational> distance;
  try {
    distance = nearest_coboundary(f).distance;
    b.value("coboundary_distance", *distance);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SearchSpaceTooLarge) throw;
  }
  std::optional<Rational> gamma;
  try {
    gamma = measure_gamma(X, G, false).gamma;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SearchSpaceTooLarge) throw;
  }
  if (!gamma || *gamma <= 0) {
    b.skip("distance_within_e_k_bound", "gamma not measurable at this size");
    return;
  }
  const auto stated = e_k_coefficients(*gamma, c.k);
  const auto solved = e_k_coefficients_recurrence(*gamma, c.k);
  b.value("gamma", *gamma);
  b.value("e_k_full", stated.full);
  b.value("e_k_empty", stated.empty);
  b.value("tester_constant", tester_constant(stated));
  b.value("e_k_recurrence_full", solved.full);
  b.value("e_k_recurrence_empty", solved.empty);
  if (!distance) {
    b.skip("distance_within_e_k_bound", "coboundary space too large");
    return;
  }
  const Rational bound = 2 * (stated.full + stated.empty) * tv.rejection;
  const Rational solved_bound = 2 * (solved.full + solved.empty) * tv.rejection;
  b.value("within_recurrence_bound", *distance <= solved_bound);
  b.check("distance_within_e_k_bound", *distance <= bound, to_string(*distance) + " <= " + to_string(bound));
}

void run_oracle(const ExperimentConfig& c, const ComplexPtr& X, Builder& b) {
  Rng rng(c.seed);
  if (c.tester == "oracle-agreeing") {
    const LAssignment F = l_input(c, X, rng, b);
    if (const auto refusal = agreement_oracle_refusal(*X, F.l())) throw Error(ErrorKind::SearchSpaceTooLarge, *refusal);
    const auto res = dist_to_agreeing_oracle(F);
    b.value("distance", res.distance);
    std::string globals;
    for (auto g : res.witness.globals) globals += (globals.empty() ? "" : " ") + std::to_string(g);
    b.value("nearest_globals", globals);
  } else if (c.tester == "oracle-coboundary") {
    const RepPtr R = RepresentationComplex::build(X, c.k);
    const auto G = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(c.l));
    const Cochain f = cochain_input(c, R, G, rng, b);
    b.value("distance", nearest_coboundary(f).distance);
  } else {
    const FaceFunction F = ds_input(c, X, rng, b);
    const auto res = dist_to_direct_sums_oracle(F);
    b.value("distance", res.distance);
    b.value("nearest_origin_count", static_cast<std::uint64_t>(res.nearest.size()));
  }
}

void run_building_cycle(const ExperimentConfig& c, Builder& b) {
  const SphericalBuilding B = spherical_building(c.p, c.d);
  const auto cycle = building_non_skipping_cycle(B);
  std::string listing;
  for (Vertex v : cycle) listing += (listing.empty() ? "" : " ") + std::to_string(v);
  b.value("vertices", static_cast<std::uint64_t>(B.complex.count(0)));
  b.value("edges", static_cast<std::uint64_t>(B.complex.count(1)));
  b.value("cycle", listing);
  b.value("cycle_length", static_cast<std::uint64_t>(cycle.size()));
  b.value("max_chord_skip", std::to_string(max_chord_skip(B.complex, cycle)));
  const auto expected = static_cast<std::size_t>(2 * (c.p - 1));
  b.check("cycle_length_is_2p_minus_2", cycle.size() == expected,
          std::to_string(cycle.size()) + " vs " + std::to_string(expected));
  b.check("cycle_is_1_non_skipping", is_non_skipping(B.complex, cycle, 1));
}

void run_coloring(const ExperimentConfig& c, const ComplexPtr& X, Builder& b) {
  std::vector<Vertex> cycle(static_cast<std::size_t>(c.m));
  for (int i = 0; i < c.m; ++i) cycle[static_cast<std::size_t>(i)] = i;
  if (const auto refusal = agreement_oracle_refusal(*X, 2)) throw Error(ErrorKind::SearchSpaceTooLarge, *refusal);
  const auto agreeing = [](const LAssignment& F) { return dist_to_agreeing_oracle(F).distance == 0; };
  const bool even_len = c.m % 2 == 0;
  const bool even_ok = agreeing(coloring_even(X, cycle));
  b.value("even_candidate_agreeing", even_ok);
  b.check("even_candidate_agrees_iff_even_length", even_ok == even_len);
  bool odd_ok = true, glue_ok = true;
  for (int t = 0; t < c.m; ++t) {
    const LAssignment odd = coloring_odd(X, cycle, t);
    const bool status = agreeing(odd);
    odd_ok = odd_ok && status == !even_len;
    for (int j = 0; j < c.m; ++j)
      if (j != t) glue_ok = glue_ok && agreeing(glue(odd, cycle, j)) != status;
  }
  b.check("odd_candidates_agree_iff_odd_length", odd_ok);
  b.check("gluing_flips_agreement", glue_ok);
  const LowerBoundDemo demo = lower_bound_demo(X, cycle);
  b.value("skip_bound", std::to_string(demo.skip_bound));
  b.value("max_query_size", static_cast<std::uint64_t>(demo.max_query_size));
  b.value("query_sets", demo.query_sets);
  b.value("fooled_query_sets", demo.fooled);
  b.check("every_small_query_set_fooled", demo.fooled == demo.query_sets);
}

void run_adversary(const ExperimentConfig& c, const ComplexPtr& X, Builder& b) {
  if (c.l < 2) throw Error(ErrorKind::PreconditionUnsatisfiable, "the adversary needs l >= 2");
  if (const auto refusal = agreement_oracle_refusal(*X, c.l)) throw Error(ErrorKind::SearchSpaceTooLarge, *refusal);
  Rng rng(c.seed);
  const GlobalFunction full = all_vertices(*X);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<GlobalFunction> globals(static_cast<std::size_t>(c.l));
    for (auto& g : globals) g = rng.next() & full;
    const GlobalFunction special = rng.next() & full;
    try {
      adversarial_l_assignment(X, c.k, globals, special, 0);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PreconditionUnsatisfiable) continue;
      throw;
    }
    std::string listing;
    for (auto g : globals) listing += (listing.empty() ? "" : " ") + std::to_string(g);
    b.value("globals", listing);
    b.value("special", std::to_string(special));
    b.value("special_face", std::string("0"));
    b.value("slot_convention", std::string("0-based slots; the special function fills the last slot of the special face"));
    const FoolingReport rep = verify_fooling(X, c.k, globals, special, 0);
    b.value("query_sets", rep.query_sets);
    b.value("fooled_query_sets", rep.fooled);
    b.check("adversary_not_agreeing", !rep.adversary_agreeing);
    b.check("every_query_set_fooled", rep.fooled == rep.query_sets);
    return;
  }
  throw Error(ErrorKind::PreconditionUnsatisfiable, "no admissible adversary found");
}

Json config_json(const ExperimentConfig& c) {
  Json j;
  j["generator"] = c.generator;
  j["n"] = c.n;
  j["d"] = c.d;
  j["p"] = c.p;
  j["m"] = c.m;
  j["complex_path"] = c.complex_path;
  j["tester"] = c.tester;
  j["input"] = c.input;
  j["input_path"] = c.input_path;
  j["k"] = c.k;
  j["l"] = c.l;
  j["mode"] = c.mode;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  return j;
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  c.generator = j.at("generator").get<std::string>();
  c.n = j.at("n").get<int>();
  c.d = j.at("d").get<int>();
  c.p = j.at("p").get<int>();
  c.m = j.at("m").get<int>();
  c.complex_path = j.at("complex_path").get<std::string>();
  c.tester = j.at("tester").get<std::string>();
  c.input = j.at("input").get<std::string>();
  c.input_path = j.at("input_path").get<std::string>();
  c.k = j.at("k").get<int>();
  c.l = j.at("l").get<int>();
  c.mode = j.at("mode").get<std::string>();
  c.trials = j.at("trials").get<std::uint64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

}  // namespace

bool ExperimentConfig::operator==(const ExperimentConfig& o) const { return config_json(*this) == config_json(o); }

bool Report::any_failed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return true;
  return false;
}

const std::string* Report::value(const std::string& name) const {
  for (const auto& [k, v] : values)
    if (k == name) return &v;
  return nullptr;
}

const Check* Report::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

SimplicialComplex build_complex(const ExperimentConfig& c) {
  if (c.generator == "complete") return complete_complex(c.n, c.d);
  if (c.generator == "cycle") return cycle_graph(c.m);
  if (c.generator == "wheel") return wheel_complex(c.m);
  if (c.generator == "building") return spherical_building(c.p, c.d).complex;
  if (c.generator == "file") return complex_from_json(read_text_file(c.complex_path));
  throw Error(ErrorKind::InvalidParams, "unknown generator " + c.generator);
}

Report run_experiment(const ExperimentConfig& config) {
  Report report;
  report.config = config;
  Builder b{report};
  if (config.tester == "building-cycle") {
    run_building_cycle(config, b);
    return report;
  }
  const auto X = std::make_shared<const SimplicialComplex>(build_complex(config));
  if (config.tester == "list-agreement") run_list_agreement(config, X, b);
  else if (config.tester == "direct-sum") run_direct_sum(config, X, b);
  else if (config.tester == "coboundary") run_coboundary(config, X, b);
  else if (config.tester == "oracle-agreeing" || config.tester == "oracle-coboundary" ||
           config.tester == "oracle-direct-sum" || config.tester == "coloring" || config.tester == "adversary") {
    try {
      if (config.tester == "coloring") run_coloring(config, X, b);
      else if (config.tester == "adversary") run_adversary(config, X, b);
      else run_oracle(config, X, b);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchSpaceTooLarge) throw;
      b.skip("exhaustive_oracle", e.what());
    }
  } else throw Error(ErrorKind::InvalidParams, "unknown tester " + config.tester);
  return report;
}

std::string render_report(const Report& report, const std::string& format) {
  if (format == "json") {
    Json j;
    j["config"] = config_json(report.config);
    Json values = Json::object();
    for (const auto& [k, v] : report.values) values[k] = v;
    j["values"] = std::move(values);
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    Json trials = Json::array();
    for (const auto& t : report.trials)
      trials.push_back({{"index", t.index}, {"seed", t.seed}, {"accepted", t.accepted}, {"branch", t.branch},
                        {"entry_reads", t.entry_reads}, {"face_reads", t.face_reads}, {"underlying_reads", t.underlying_reads}});
    j["trials"] = std::move(trials);
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::ostringstream out;
    out << "index,seed,accepted,branch,entry_reads,face_reads,underlying_reads\n";
    for (const auto& t : report.trials)
      out << t.index << ',' << t.seed << ',' << (t.accepted ? 1 : 0) << ',' << t.branch << ',' << t.entry_reads << ','
          << t.face_reads << ',' << t.underlying_reads << '\n';
    return out.str();
  }
  throw Error(ErrorKind::UnknownFormat, "report format must be json or csv, got " + format);
}

Report report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    Report r;
    r.config = config_from_json(j.at("config"));
    for (const auto& [k, v] : j.at("values").items()) r.values.emplace_back(k, v.get<std::string>());
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("status").get<std::string>(), c.at("detail").get<std::string>()});
    for (const auto& t : j.at("trials"))
      r.trials.push_back({t.at("index").get<std::uint64_t>(), t.at("seed").get<std::uint64_t>(), t.at("accepted").get<bool>(),
                          t.at("branch").get<int>(), t.at("entry_reads").get<std::uint64_t>(),
                          t.at("face_reads").get<std::uint64_t>(), t.at("underlying_reads").get<std::uint64_t>()});
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

void emit_report(const Report& report, const std::string& format, const std::string& path) {
  write_text_file(path, render_report(report, format));
}

}  // namespace listagree
