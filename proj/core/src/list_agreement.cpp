#include "listagree/list_agreement.hpp"

#include "listagree/error.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

namespace listagree {

CoverEdgeAnswer match_lists(const FiniteGroup& Sl, const std::vector<LocalFunction>& a, const Face& fa,
                            const std::vector<LocalFunction>& b, const Face& fb) {
  const Face I = face_intersection(fa, fb);
  const int l = Sl.degree();
  std::vector<LocalFunction> ra(static_cast<std::size_t>(l)), rb(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    ra[static_cast<std::size_t>(i)] = restrict_local(a[static_cast<std::size_t>(i)], fa, I);
    rb[static_cast<std::size_t>(i)] = restrict_local(b[static_cast<std::size_t>(i)], fb, I);
  }
  CoverEdgeAnswer ans;
  for (Element g = 0; g < Sl.order(); ++g) {
    const auto& p = Sl.permutation(g);
    bool ok = true;
    for (int i = 0; i < l && ok; ++i) ok = ra[static_cast<std::size_t>(i)] == rb[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
    if (!ok) continue;
    if (ans.adequate) {
      ans.ambiguous = true;
      break;
    }
    ans.adequate = true;
    ans.pi = g;
  }
  return ans;
}

CoverEdgeAnswer query_cover_edge(const LAssignment& F, const FiniteGroup& Sl, std::size_t face1, std::size_t face2) {
  const Face &a = F.face(face1), &b = F.face(face2);
  if (face1 == face2 || static_cast<int>(face_intersection(a, b).size()) != F.k() ||
      !F.base().contains(face_union(a, b)))
    throw Error(ErrorKind::NotAnEdge, "faces do not form a representation-complex edge");
  return match_lists(Sl, F.list(face1), a, F.list(face2), b);
}

bool is_adequately_covered(const LAssignment& F, const FiniteGroup& Sl, std::size_t face1, std::size_t face2) {
  return query_cover_edge(F, Sl, face1, face2).adequate;
}

InducedCochain induced_cochain(const LAssignment& F, const RepresentationComplex& R, const GroupPtr& Sl) {
  if (F.base_ptr() != R.base_ptr() || F.k() != R.k()) throw Error(ErrorKind::BaseMismatch, "assignment and representation complex differ");
  if (Sl->degree() != F.l()) throw Error(ErrorKind::InvalidParams, "group degree must equal the list length");
  const auto& edges = R.complex().faces(1);
  InducedCochain out{Cochain(R.complex_ptr(), Sl, 1), std::vector<bool>(edges.size(), false), false};
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto u = static_cast<std::size_t>(edges[e][0]), v = static_cast<std::size_t>(edges[e][1]);
    const auto ans = match_lists(*Sl, F.list(u), F.face(u), F.list(v), F.face(v));
    out.phi.set(e, Sl->inv(ans.pi));
    out.inadequate[e] = !ans.adequate;
    out.ambiguous_seen = out.ambiguous_seen || ans.ambiguous;
  }
  return out;
}

AgreementReport list_agreement_exact(const LAssignment& F, const RepresentationComplex& R) {
  auto Sl = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(F.l()));
  const auto induced = induced_cochain(F, R, Sl);
  AgreementReport rep;
  rep.triangle = empty_triangle_test_exact(induced.phi, R);
  std::uint64_t bad = 0;
  for (std::size_t e = 0; e < induced.inadequate.size(); ++e)
    if (induced.inadequate[e]) bad += R.complex().weight_count(1, e);
  rep.inadequate_norm = Rational(bad, R.complex().weight_denominator(1));
  rep.rejection = (rep.triangle.rejection + rep.inadequate_norm) / 2;
  rep.ambiguous_seen = induced.ambiguous_seen;
  rep.two_locally_differing = is_two_locally_differing(F);
  return rep;
}

std::vector<LocalFunction> LAssignmentSource::read(std::size_t face, QueryCounters& counters) const {
  counters.entry_reads += static_cast<std::uint64_t>(F_.l());
  counters.face_reads += 1;
  return F_.list(face);
}

ShotOutcome list_agreement_shot(const ListSource& source, const RepresentationComplex& R, const FiniteGroup& Sl, Rng& rng) {
  ShotOutcome out;
  std::map<std::size_t, std::vector<LocalFunction>> memo;
  const auto lists = [&](std::size_t face) -> const std::vector<LocalFunction>& {
    auto it = memo.find(face);
    if (it == memo.end()) it = memo.emplace(face, source.read(face, out.reads)).first;
    return it->second;
  };
  const auto answer = [&](Vertex a, Vertex b) {
    const auto u = static_cast<std::size_t>(a), v = static_cast<std::size_t>(b);
    return match_lists(Sl, lists(u), R.vertex_face(a), lists(v), R.vertex_face(b));
  };
  if (rng.coin()) {
    out.branch = 0;
    const EdgeOracle oracle = [&](Vertex a, Vertex b) {
      if (a < b) return Sl.inv(answer(a, b).pi);
      return answer(b, a).pi;
    };
    out.accepted = empty_triangle_test_once(R, Sl, oracle, rng);
  } else {
    out.branch = 1;
    const Face e = sample_rep_face(R, 1, rng);
    out.accepted = answer(e[0], e[1]).adequate;
  }
  return out;
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("LISTAGREE_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MonteCarloSummary list_agreement_monte_carlo(const ListSource& source, const RepresentationComplex& R,
                                             const FiniteGroup& Sl, std::uint64_t trials, std::uint64_t master_seed,
                                             unsigned workers) {
  if (workers == 0) workers = default_worker_count();
  MonteCarloSummary out;
  out.master_seed = master_seed;
  out.trials = trials;
  out.outcomes.resize(trials);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  const auto work = [&] {
    try {
      for (std::uint64_t t = next++; t < trials; t = next++) {
        Rng rng(trial_seed(master_seed, t));
        out.outcomes[t] = list_agreement_shot(source, R, Sl, rng);
      }
    } catch (...) {
      std::lock_guard<std::mutex> g(failure_lock);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  for (const auto& o : out.outcomes) {
    out.rejections += !o.accepted;
    out.max_reads.entry_reads = std::max(out.max_reads.entry_reads, o.reads.entry_reads);
    out.max_reads.face_reads = std::max(out.max_reads.face_reads, o.reads.face_reads);
    out.max_reads.underlying_reads = std::max(out.max_reads.underlying_reads, o.reads.underlying_reads);
  }
  out.estimate = trials ? static_cast<double>(out.rejections) / static_cast<double>(trials) : 0.0;
  std::tie(out.ci_low, out.ci_high) = wilson_interval(out.rejections, trials);
  return out;
}

}  // namespace listagree
