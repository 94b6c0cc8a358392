#include "listagree/direct_sum.hpp"

#include "listagree/error.hpp"

#include <bit>
#include <deque>
#include <limits>

namespace listagree {

namespace {

std::uint64_t face_mask(const SimplicialComplex& X, const Face& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= 1ULL << X.vertex_index(v);
  return m;
}

void require_order(const SimplicialComplex& X, int k) {
  if (k < 1 || k > X.dim()) throw Error(ErrorKind::DimensionOutOfRange, "direct-sum order must satisfy 1 <= k <= dim");
  if (X.count(0) > 64) throw Error(ErrorKind::InvalidParams, "more than 64 vertices");
}

bool value_on(const FaceFunction& F, const Face& s) { return F.values[F.base->require_index(s)] != 0; }

}  // namespace

FaceFunction::FaceFunction(ComplexPtr b, int order) : base(std::move(b)), k(order) {
  require_order(*base, k);
  values.assign(base->count(k - 1), 0);
}

FaceFunction eval_direct_sum(ComplexPtr base, GlobalFunction f, int k) {
  FaceFunction F(base, k);
  for (std::size_t i = 0; i < F.size(); ++i)
    F.values[i] = static_cast<std::uint8_t>(std::popcount(f & face_mask(*base, F.faces()[i])) & 1);
  return F;
}

bool origin_value_via(const FaceFunction& F, Vertex v, const Face& sigma) {
  bool acc = false;
  for (Vertex x : sigma)
    if (x != v) acc ^= value_on(F, face_difference(sigma, Face{x}));
  return acc;
}

bool origin_difference_via(const FaceFunction& F, Vertex u, Vertex v, const Face& tau) {
  return value_on(F, face_difference(tau, Face{u})) ^ value_on(F, face_difference(tau, Face{v}));
}

OriginFunctions reconstruct_origin(const FaceFunction& F) {
  const auto& X = *F.base;
  const auto& kfaces = X.faces(F.k);
  const std::size_t n = X.count(0);
  // First k-face (in index order) containing each vertex.
  std::vector<std::optional<std::size_t>> home(n);
  for (std::size_t t = 0; t < kfaces.size(); ++t)
    for (Vertex v : kfaces[t])
      if (!home[X.vertex_index(v)]) home[X.vertex_index(v)] = t;
  for (std::size_t i = 0; i < n; ++i)
    if (!home[i]) throw Error(ErrorKind::NoContainingFace, "vertex lies in no k-face");

  OriginFunctions out;
  if (F.k % 2) {
    for (std::size_t i = 0; i < n; ++i)
      if (origin_value_via(F, X.vertex_labels()[i], kfaces[*home[i]])) out.f0 |= 1ULL << i;
    return out;
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> faces_of(n);
  for (std::size_t t = 0; t < kfaces.size(); ++t)
    for (Vertex v : kfaces[t]) faces_of[X.vertex_index(v)].push_back(t);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    const Vertex uv = X.vertex_labels()[u];
    for (std::size_t t : faces_of[u])
      for (Vertex w : kfaces[t]) {
        const std::size_t wi = X.vertex_index(w);
        if (seen[wi]) continue;
        seen[wi] = true;
        const bool bit = (((out.f0 >> u) & 1) != 0) ^ origin_difference_via(F, uv, w, kfaces[t]);
        if (bit) out.f0 |= 1ULL << wi;
        queue.push_back(wi);
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) throw Error(ErrorKind::NoContainingFace, "k-faces do not connect every vertex");
  const GlobalFunction full = n == 64 ? ~0ULL : (1ULL << n) - 1;
  out.f1 = ~out.f0 & full;
  return out;
}

std::vector<LocalFunction> query_origin_on_face(const FaceFunction& F, const Face& tau, std::uint64_t& reads) {
  const std::size_t m = tau.size();
  if (static_cast<int>(m) != F.k + 1) throw Error(ErrorKind::InvalidParams, "origin queries need a k-face");
  // drop[j] = F(tau \ {tau[j]}).
  std::vector<bool> drop(m);
  for (std::size_t j = 0; j < m; ++j) drop[j] = value_on(F, face_difference(tau, Face{tau[j]}));
  reads += m;
  LocalFunction f0 = 0;
  if (F.k % 2) {
    bool all = false;
    for (std::size_t j = 0; j < m; ++j) all = all ^ drop[j];
    for (std::size_t j = 0; j < m; ++j)
      if (all ^ drop[j]) f0 |= 1u << j;
    return {f0};
  }
  for (std::size_t j = 1; j < m; ++j)
    if (drop[0] ^ drop[j]) f0 |= 1u << j;
  const LocalFunction full = (1u << m) - 1;
  return {f0, ~f0 & full};
}

LAssignment induced_l_assignment(const FaceFunction& F) {
  LAssignment A(F.base, F.k, F.k % 2 ? 1 : 2);
  std::uint64_t reads = 0;
  for (std::size_t t = 0; t < A.face_count(); ++t) {
    const auto vals = query_origin_on_face(F, A.face(t), reads);
    for (std::size_t s = 0; s < vals.size(); ++s) A.set_entry(t, static_cast<int>(s), vals[s]);
  }
  return A;
}

std::vector<LocalFunction> DirectSumSource::read(std::size_t face, QueryCounters& counters) const {
  auto vals = query_origin_on_face(F_, F_.base->faces(F_.k)[face], counters.underlying_reads);
  counters.face_reads += 1;
  counters.entry_reads += vals.size();
  return vals;
}

AgreementReport direct_sum_test_exact(const FaceFunction& F, const RepresentationComplex& R) {
  if (R.base_ptr() != F.base || R.k() != F.k) throw Error(ErrorKind::BaseMismatch, "direct-sum test needs R̂_k of the same base");
  return list_agreement_exact(induced_l_assignment(F), R);
}

Rational face_function_distance(const FaceFunction& F, const FaceFunction& G) {
  if (F.base != G.base || F.k != G.k) throw Error(ErrorKind::BaseMismatch, "face functions differ in base or order");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < F.size(); ++i)
    if (F.values[i] != G.values[i]) total += F.base->weight_count(F.k - 1, i);
  return Rational(total, F.base->weight_denominator(F.k - 1));
}

DirectSumOracleResult dist_to_direct_sums_oracle(const FaceFunction& F) {
  const auto& X = *F.base;
  const std::size_t n = X.count(0);
  if (n > 16) throw Error(ErrorKind::SearchSpaceTooLarge, "direct-sum oracle needs |X(0)| <= 16");
  std::vector<std::uint64_t> masks(F.size()), weights(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) {
    masks[i] = face_mask(X, F.faces()[i]);
    weights[i] = X.weight_count(F.k - 1, i);
  }
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  DirectSumOracleResult res;
  for (GlobalFunction f = 0; f < (GlobalFunction{1} << n); ++f) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < F.size() && total <= best; ++i)
      if (static_cast<std::uint8_t>(std::popcount(f & masks[i]) & 1) != F.values[i]) total += weights[i];
    if (total < best) {
      best = total;
      res.nearest.clear();
    }
    if (total == best) res.nearest.push_back(f);
  }
  res.distance = Rational(best, X.weight_denominator(F.k - 1));
  return res;
}

}  // namespace listagree
