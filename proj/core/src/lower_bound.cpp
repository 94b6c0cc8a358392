#include "listagree/agreement_oracle.hpp"
#include "listagree/chains.hpp"
#include "listagree/error.hpp"
#include "listagree/generators.hpp"

#include <algorithm>
#include <map>

namespace listagree {

namespace {

bool agreeing(const LAssignment& F) { return dist_to_agreeing_oracle(F).distance == 0; }

bool same_on(const LAssignment& A, const LAssignment& B, const std::vector<std::size_t>& faces) {
  for (std::size_t f : faces)
    if (A.list(f) != B.list(f)) return false;
  return true;
}

// Calls visit(subset) for every subset of {0..n-1} of size <= max_size.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t max_size, Visit visit) {
  std::vector<std::size_t> pick;
  const auto rec = [&](auto&& self, std::size_t from) -> void {
    visit(pick);
    if (pick.size() == max_size) return;
    for (std::size_t x = from; x < n; ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

LowerBoundDemo lower_bound_demo(ComplexPtr X, const std::vector<Vertex>& cycle) {
  LowerBoundDemo out;
  const int m = static_cast<int>(cycle.size());
  out.cycle_length = m;
  out.skip_bound = std::max(1, max_chord_skip(*X, cycle));
  out.max_query_size = static_cast<std::size_t>((m + out.skip_bound - 1) / out.skip_bound - 1);

  const LAssignment even = coloring_even(X, cycle);
  std::vector<LAssignment> odd, glued;
  for (int t = 0; t < m; ++t) odd.push_back(coloring_odd(X, cycle, t));
  for (int t = 0; t < m; ++t) glued.push_back(glue(odd[0], cycle, t));
  std::map<const LAssignment*, bool> status;
  const auto agrees = [&](const LAssignment& F) {
    auto it = status.find(&F);
    if (it == status.end()) it = status.emplace(&F, agreeing(F)).first;
    return it->second;
  };
  out.even_candidate_agreeing = agrees(even);
  out.odd_candidate_agreeing = agrees(odd[0]);

  // For each edge face, the cycle edges its query touches: itself, or those a chord skips.
  std::vector<std::vector<bool>> touches(X->count(1), std::vector<bool>(static_cast<std::size_t>(m), false));
  for (std::size_t e = 0; e < X->count(1); ++e) {
    const Face& edge = X->faces(1)[e];
    const auto a = std::find(cycle.begin(), cycle.end(), edge[0]) - cycle.begin();
    const auto b = std::find(cycle.begin(), cycle.end(), edge[1]) - cycle.begin();
    if (a == m || b == m) continue;
    for (int t = 0; t < m; ++t)
      touches[e][static_cast<std::size_t>(t)] = chord_skips(m, static_cast<int>(a), static_cast<int>(b), t);
  }

  for_each_subset(X->count(1), out.max_query_size, [&](const std::vector<std::size_t>& Q) {
    ++out.query_sets;
    int free_edge = -1;
    for (int t = 0; t < m && free_edge < 0; ++t)
      if (std::none_of(Q.begin(), Q.end(), [&](std::size_t e) { return touches[e][static_cast<std::size_t>(t)]; })) free_edge = t;
    if (free_edge < 0) return;
    const LAssignment *A, *B;
    if (m % 2) {
      A = &even;
      B = &odd[static_cast<std::size_t>(free_edge)];
    } else if (free_edge == 0) {
      A = &odd[0];
      B = &even;
    } else {
      A = &odd[0];
      B = &glued[static_cast<std::size_t>(free_edge)];
    }
    if (same_on(*A, *B, Q) && agrees(*A) != agrees(*B)) ++out.fooled;
  });
  return out;
}

LAssignment adversarial_l_assignment(ComplexPtr X, int k, const std::vector<GlobalFunction>& globals,
                                     GlobalFunction special, std::size_t special_face) {
  const int l = static_cast<int>(globals.size());
  if (l < 2) throw Error(ErrorKind::PreconditionUnsatisfiable, "the adversary needs l >= 2");
  if (special_face >= X->count(k)) throw Error(ErrorKind::FaceNotInComplex, "special face index out of range");
  const Face& hat = X->faces(k)[special_face];
  bool witnessed = false;
  for (const Face& sub : subsets_of_size(hat, k)) {
    bool all = true;
    for (GlobalFunction g : globals) all = all && restrict_global(*X, g, sub) != restrict_global(*X, special, sub);
    witnessed = witnessed || all;
  }
  if (!witnessed) throw Error(ErrorKind::PreconditionUnsatisfiable, "special function agrees with some global on every k-subset");
  std::vector<std::vector<int>> identity(X->count(k), std::vector<int>(static_cast<std::size_t>(l)));
  for (auto& p : identity)
    for (int i = 0; i < l; ++i) p[static_cast<std::size_t>(i)] = i;
  LAssignment r = agreeing_l_assignment(X, k, globals, identity);
  r.set_entry(special_face, l - 1, restrict_global(*X, special, hat));
  return r;
}

LAssignment fooling_assignment(ComplexPtr X, int k, const std::vector<GlobalFunction>& globals,
                               GlobalFunction special, std::size_t special_face, int hidden_slot) {
  const int l = static_cast<int>(globals.size());
  LAssignment a = adversarial_l_assignment(X, k, globals, special, special_face);
  if (hidden_slot < 0 || hidden_slot >= l) throw Error(ErrorKind::InvalidParams, "slot out of range");
  if (hidden_slot == l - 1) {
    a.set_entry(special_face, l - 1, restrict_global(*X, globals.back(), a.face(special_face)));
    return a;
  }
  for (std::size_t s = 0; s < a.face_count(); ++s) {
    const GlobalFunction g = s == special_face ? globals.back() : special;
    a.set_entry(s, hidden_slot, restrict_global(*X, g, a.face(s)));
  }
  return a;
}

FoolingReport verify_fooling(ComplexPtr X, int k, const std::vector<GlobalFunction>& globals, GlobalFunction special,
                             std::size_t special_face) {
  const int l = static_cast<int>(globals.size());
  const LAssignment r = adversarial_l_assignment(X, k, globals, special, special_face);
  FoolingReport out;
  out.adversary_agreeing = agreeing(r);
  std::vector<std::optional<LAssignment>> fooling(static_cast<std::size_t>(l));
  std::vector<std::optional<bool>> fooling_agrees(static_cast<std::size_t>(l));
  const std::size_t entries = r.face_count() * static_cast<std::size_t>(l);
  std::vector<std::size_t> pick;
  const auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == l - 1) {
      ++out.query_sets;
      std::vector<bool> used(static_cast<std::size_t>(l), false);
      for (std::size_t q : pick) used[q % static_cast<std::size_t>(l)] = true;
      const auto hidden = static_cast<std::size_t>(std::find(used.begin(), used.end(), false) - used.begin());
      if (!fooling[hidden]) {
        fooling[hidden] = fooling_assignment(X, k, globals, special, special_face, static_cast<int>(hidden));
        fooling_agrees[hidden] = agreeing(*fooling[hidden]);
      }
      bool matches = *fooling_agrees[hidden];
      for (std::size_t q : pick) {
        const std::size_t face = q / static_cast<std::size_t>(l);
        const int slot = static_cast<int>(q % static_cast<std::size_t>(l));
        matches = matches && fooling[hidden]->entry(face, slot) == r.entry(face, slot);
      }
      out.fooled += matches;
      return;
    }
    for (std::size_t q = from; q < entries; ++q) {
      pick.push_back(q);
      self(self, q + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace listagree
