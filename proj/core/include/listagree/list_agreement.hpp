#pragma once

#include "listagree/coboundary_test.hpp"
#include "listagree/list_assignment.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace listagree {

struct CoverEdgeAnswer {
  Element pi = 0;          // entry i of the first face matches entry pi(i) of the second
  bool adequate = false;   // some permutation matches every entry
  bool ambiguous = false;  // more than one permutation matches
};

// Smallest matching permutation (S_l index order is lexicographic), or the identity.
CoverEdgeAnswer match_lists(const FiniteGroup& Sl, const std::vector<LocalFunction>& a, const Face& fa,
                            const std::vector<LocalFunction>& b, const Face& fb);

// Throws NotAnEdge unless the two k-faces form an R̂_k edge.
CoverEdgeAnswer query_cover_edge(const LAssignment& F, const FiniteGroup& Sl, std::size_t face1, std::size_t face2);
bool is_adequately_covered(const LAssignment& F, const FiniteGroup& Sl, std::size_t face1, std::size_t face2);

struct InducedCochain {
  Cochain phi;                   // φ(s1, s2) = π^{-1} on R̂_k edges
  std::vector<bool> inadequate;  // per R̂_k edge
  bool ambiguous_seen = false;
};
InducedCochain induced_cochain(const LAssignment& F, const RepresentationComplex& R, const GroupPtr& Sl);

struct AgreementReport {
  TriangleViolations triangle;
  Rational inadequate_norm = 0;
  Rational rejection = 0;  // (triangle.rejection + inadequate_norm) / 2
  bool ambiguous_seen = false;
  bool two_locally_differing = false;
};

// Exact rejection probability of the list-agreement test.
AgreementReport list_agreement_exact(const LAssignment& F, const RepresentationComplex& R);

struct QueryCounters {
  std::uint64_t entry_reads = 0;       // (face, slot) probes
  std::uint64_t face_reads = 0;        // whole-list probes
  std::uint64_t underlying_reads = 0;  // reads of data behind the lists, if any
};

// Read access to per-face lists for single-shot testing.
class ListSource {
 public:
  virtual ~ListSource() = default;
  virtual int sheets() const = 0;
  virtual std::vector<LocalFunction> read(std::size_t face, QueryCounters& counters) const = 0;
};

class LAssignmentSource : public ListSource {
 public:
  explicit LAssignmentSource(const LAssignment& F) : F_(F) {}
  int sheets() const override { return F_.l(); }
  std::vector<LocalFunction> read(std::size_t face, QueryCounters& counters) const override;

 private:
  const LAssignment& F_;
};

struct ShotOutcome {
  bool accepted = true;
  int branch = 0;  // 0: empty-triangle test, 1: adequacy check
  QueryCounters reads;
};

// One run of the list-agreement test; each face's list is read at most once.
ShotOutcome list_agreement_shot(const ListSource& source, const RepresentationComplex& R, const FiniteGroup& Sl, Rng& rng);

struct MonteCarloSummary {
  std::uint64_t master_seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t rejections = 0;
  double estimate = 0;
  double ci_low = 0;
  double ci_high = 0;
  QueryCounters max_reads;
  std::vector<ShotOutcome> outcomes;
};

// Trial t uses Rng(trial_seed(master_seed, t)); workers == 0 reads LISTAGREE_WORKERS.
MonteCarloSummary list_agreement_monte_carlo(const ListSource& source, const RepresentationComplex& R,
                                             const FiniteGroup& Sl, std::uint64_t trials, std::uint64_t master_seed,
                                             unsigned workers = 0);

// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

// LISTAGREE_WORKERS if set and positive, else hardware concurrency (at least 1).
unsigned default_worker_count();

}  // namespace listagree
