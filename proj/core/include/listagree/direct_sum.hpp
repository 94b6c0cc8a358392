#pragma once

#include "listagree/cochain.hpp"
#include "listagree/list_agreement.hpp"
#include "listagree/list_assignment.hpp"
#include "listagree/representation.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace listagree {

// A bit per (k-1)-face of the base; k is the direct-sum order.
struct FaceFunction {
  ComplexPtr base;
  int k = 1;
  std::vector<std::uint8_t> values;

  FaceFunction(ComplexPtr base, int k);
  std::size_t size() const { return values.size(); }
  const std::vector<Face>& faces() const { return base->faces(k - 1); }
  bool operator==(const FaceFunction& o) const { return base == o.base && k == o.k && values == o.values; }
};

// F(s) = Σ_{v∈s} f(v) mod 2 over every (k-1)-face s.
FaceFunction eval_direct_sum(ComplexPtr base, GlobalFunction f, int k);

// Odd k: one origin function. Even k: f0 with f0(anchor) = 0 at the lowest vertex,
// and f1 = complement of f0. Throws NoContainingFace when a vertex lies in no
// k-face or (even k) the k-face adjacency does not reach every vertex.
struct OriginFunctions {
  GlobalFunction f0 = 0;
  std::optional<GlobalFunction> f1;
};
OriginFunctions reconstruct_origin(const FaceFunction& F);

// Odd k: the value at v read through the k-face `sigma` ∋ v.
bool origin_value_via(const FaceFunction& F, Vertex v, const Face& sigma);
// Even k: f(u) + f(v) read through the k-face `tau` ⊇ {u, v}.
bool origin_difference_via(const FaceFunction& F, Vertex u, Vertex v, const Face& tau);

// Origin values on the k-face `tau` from the k+1 values F(tau \ {x}); adds k+1 to
// `reads`. Odd k: one local function; even k: the pair anchored at tau's lowest vertex.
std::vector<LocalFunction> query_origin_on_face(const FaceFunction& F, const Face& tau, std::uint64_t& reads);

// The l-assignment on X(k) of per-face origin queries (l = 1 for odd k, 2 for even k).
LAssignment induced_l_assignment(const FaceFunction& F);

// Lists answered on demand from F, counting the underlying reads.
class DirectSumSource : public ListSource {
 public:
  explicit DirectSumSource(const FaceFunction& F) : F_(F) {}
  int sheets() const override { return F_.k % 2 ? 1 : 2; }
  std::vector<LocalFunction> read(std::size_t face, QueryCounters& counters) const override;

 private:
  const FaceFunction& F_;
};

// Exact rejection probability of the direct-sum test (list agreement on R̂_k).
AgreementReport direct_sum_test_exact(const FaceFunction& F, const RepresentationComplex& R);

Rational face_function_distance(const FaceFunction& F, const FaceFunction& G);

struct DirectSumOracleResult {
  Rational distance;
  std::vector<GlobalFunction> nearest;  // all minimising origin functions
};
// Exhaustive over all 2^|X(0)| origin functions; throws SearchSpaceTooLarge above 16 vertices.
DirectSumOracleResult dist_to_direct_sums_oracle(const FaceFunction& F);

}  // namespace listagree
