#include "listagree/agreement_oracle.hpp"

#include "listagree/error.hpp"
#include "listagree/group.hpp"

#include <bit>
#include <limits>

namespace listagree {

OracleResult dist_to_agreeing_oracle(const LAssignment& F) {
  const auto& X = F.base();
  const std::size_t n = X.count(0);
  const int l = F.l();
  if (n > 10 || l > 3) throw Error(ErrorKind::SearchSpaceTooLarge, "oracle needs |X(0)| <= 10 and l <= 3");
  const std::size_t globals = std::size_t{1} << n;
  const std::size_t faces = F.face_count();
  const std::size_t width = static_cast<std::size_t>(F.k()) + 1;
  const std::size_t local = std::size_t{1} << width;
  const FiniteGroup Sl = FiniteGroup::symmetric(l);

  std::vector<LocalFunction> restriction(faces * globals);
  for (std::size_t s = 0; s < faces; ++s)
    for (std::size_t g = 0; g < globals; ++g) restriction[s * globals + g] = restrict_global(X, g, F.face(s));

  // cost[s][tuple]: fewest mismatching slots over permutations; best_perm records the argmin.
  std::size_t tuples = 1;
  for (int i = 0; i < l; ++i) tuples *= local;
  std::vector<std::uint32_t> cost(faces * tuples);
  std::vector<Element> best_perm(faces * tuples);
  for (std::size_t s = 0; s < faces; ++s) {
    for (std::size_t t = 0; t < tuples; ++t) {
      std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
      Element arg = 0;
      for (Element p = 0; p < Sl.order(); ++p) {
        std::uint32_t c = 0;
        std::size_t rest = t;
        for (int i = 0; i < l; ++i) {
          const auto value = static_cast<LocalFunction>(rest % local);
          rest /= local;
          c += F.entry(s, Sl.apply(p, i)) != value;
        }
        if (c < best) {
          best = c;
          arg = p;
        }
      }
      cost[s * tuples + t] = best;
      best_perm[s * tuples + t] = arg;
    }
  }

  std::uint64_t best_total = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::size_t> best_globals(static_cast<std::size_t>(l), 0);
  std::vector<std::size_t> pick(static_cast<std::size_t>(l), 0);
  const auto tuple_of = [&](std::size_t s) {
    std::size_t t = 0;
    for (int i = l - 1; i >= 0; --i) t = t * local + restriction[s * globals + pick[static_cast<std::size_t>(i)]];
    return t;
  };
  while (true) {
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < faces && total < best_total; ++s)
      total += static_cast<std::uint64_t>(cost[s * tuples + tuple_of(s)]) * X.weight_count(F.k(), s);
    if (total < best_total) {
      best_total = total;
      best_globals = pick;
    }
    // Next multiset pick[0] <= pick[1] <= ... in odometer order.
    int i = l - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == globals - 1) --i;
    if (i < 0) break;
    const std::size_t v = pick[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < l; ++j) pick[static_cast<std::size_t>(j)] = v;
  }

  OracleResult res;
  res.distance = Rational(best_total, X.weight_denominator(F.k()) * static_cast<std::uint64_t>(l));
  pick = best_globals;
  for (auto g : best_globals) res.witness.globals.push_back(g);
  for (std::size_t s = 0; s < faces; ++s) {
    const auto& p = Sl.permutation(best_perm[s * tuples + tuple_of(s)]);
    res.witness.perms.emplace_back(p.begin(), p.end());
  }
  return res;
}

AssignmentOracleResult dist_to_agreeing_assignments(const Assignment& F) {
  const auto& X = F.base();
  const std::size_t n = X.count(0);
  if (n > 20) throw Error(ErrorKind::SearchSpaceTooLarge, "assignment oracle needs |X(0)| <= 20");
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  AssignmentOracleResult res;
  for (GlobalFunction g = 0; g < (GlobalFunction{1} << n); ++g) {
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < F.face_count() && total < best; ++s)
      if (restrict_global(X, g, X.faces(F.k())[s]) != F.at(s)) total += X.weight_count(F.k(), s);
    if (total < best) {
      best = total;
      res.best = g;
    }
  }
  res.distance = Rational(best, X.weight_denominator(F.k()));
  return res;
}

Rational one_up_disagreement(const Assignment& F, const RepresentationComplex& R) {
  if (F.base_ptr() != R.base_ptr() || F.k() != R.k()) throw Error(ErrorKind::BaseMismatch, "assignment and representation complex differ");
  const auto& C = R.complex();
  std::uint64_t bad = 0;
  const auto& edges = C.faces(1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Face &a = R.vertex_face(edges[e][0]), &b = R.vertex_face(edges[e][1]);
    const Face I = face_intersection(a, b);
    if (restrict_local(F.at(static_cast<std::size_t>(edges[e][0])), a, I) != restrict_local(F.at(static_cast<std::size_t>(edges[e][1])), b, I))
      bad += C.weight_count(1, e);
  }
  return Rational(bad, C.weight_denominator(1));
}

Assignment permuted_slice(const LAssignment& F, const std::vector<std::vector<int>>& perms, int slot) {
  Assignment a(F.base_ptr(), F.k());
  for (std::size_t s = 0; s < F.face_count(); ++s) a.set(s, F.entry(s, perms[s][static_cast<std::size_t>(slot)]));
  return a;
}

}  // namespace listagree
