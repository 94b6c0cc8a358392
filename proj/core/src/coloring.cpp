#include "listagree/chains.hpp"
#include "listagree/error.hpp"
#include "listagree/generators.hpp"

#include <algorithm>

namespace listagree {

namespace {

constexpr LocalFunction kLow = 0b01;   // 1 at the smaller endpoint
constexpr LocalFunction kHigh = 0b10;  // 1 at the larger endpoint

void set_pair(LAssignment& F, std::size_t e, LocalFunction a, LocalFunction b) {
  F.set_entry(e, 0, a);
  F.set_entry(e, 1, b);
}
void set_different(LAssignment& F, std::size_t e) { set_pair(F, e, kHigh, kLow); }
void set_same(LAssignment& F, std::size_t e) { set_pair(F, e, kLow | kHigh, 0); }
bool is_same(const LAssignment& F, std::size_t e) { return F.entry(e, 0) == (kLow | kHigh) && F.entry(e, 1) == 0; }

void checked_cycle(const SimplicialComplex& X, const std::vector<Vertex>& cycle) {
  if (X.dim() < 1) throw Error(ErrorKind::NotASimpleCycle, "complex has no edges");
  try {
    require_simple_cycle(X, cycle);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotASimpleCycle, e.what());
  }
}

int position(const std::vector<Vertex>& cycle, Vertex v) {
  const auto it = std::find(cycle.begin(), cycle.end(), v);
  return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

// Fills every edge; `distance(i, j)` decides the parity of cycle-internal edges.
template <class Distance>
LAssignment candidate(ComplexPtr X, const std::vector<Vertex>& cycle, Distance distance) {
  checked_cycle(*X, cycle);
  LAssignment F(X, 1, 2);
  for (std::size_t e = 0; e < F.face_count(); ++e) {
    const Face& edge = F.face(e);
    const int i = position(cycle, edge[0]), j = position(cycle, edge[1]);
    if (i >= 0 && j >= 0) {
      if (distance(i, j) % 2) set_different(F, e);
      else set_same(F, e);
    } else if (i >= 0) {
      set_pair(F, e, kLow, 0);
    } else if (j >= 0) {
      set_pair(F, e, kHigh, 0);
    } else {
      set_pair(F, e, 0, 0);
    }
  }
  return F;
}

std::size_t cycle_edge(const SimplicialComplex& X, const std::vector<Vertex>& cycle, int t) {
  const int m = static_cast<int>(cycle.size());
  if (t < 0 || t >= m) throw Error(ErrorKind::InvalidParams, "cycle edge index out of range");
  return X.require_index(make_face({cycle[static_cast<std::size_t>(t)], cycle[static_cast<std::size_t>((t + 1) % m)]}));
}

}  // namespace

int contracted_cycle_distance(int m, int i, int j, int glued) {
  const int forward = ((j - i) % m + m) % m;  // arc i -> j covers edges i .. j-1
  const bool on_forward = ((glued - i) % m + m) % m < forward;
  return std::min(forward - (on_forward ? 1 : 0), m - forward - (on_forward ? 0 : 1));
}

LAssignment coloring_even(ComplexPtr X, const std::vector<Vertex>& cycle) {
  const int m = static_cast<int>(cycle.size());
  return candidate(X, cycle, [m](int i, int j) { return cyclic_distance(m, i, j); });
}

LAssignment coloring_odd(ComplexPtr X, const std::vector<Vertex>& cycle, int glued) {
  const int m = static_cast<int>(cycle.size());
  if (glued < 0 || glued >= m) throw Error(ErrorKind::InvalidParams, "cycle edge index out of range");
  LAssignment F = candidate(X, cycle, [m, glued](int i, int j) { return contracted_cycle_distance(m, i, j, glued); });
  set_same(F, cycle_edge(*X, cycle, glued));
  return F;
}

LAssignment glue(const LAssignment& F, const std::vector<Vertex>& cycle, int j) {
  const auto& X = F.base();
  checked_cycle(X, cycle);
  if (F.k() != 1 || F.l() != 2) throw Error(ErrorKind::InvalidParams, "gluing acts on edge 2-assignments");
  const int m = static_cast<int>(cycle.size());
  LAssignment G = F;
  const std::size_t target = cycle_edge(X, cycle, j);
  for (std::size_t e = 0; e < G.face_count(); ++e) {
    if (e == target) continue;
    const Face& edge = G.face(e);
    const int a = position(cycle, edge[0]), b = position(cycle, edge[1]);
    if (a < 0 || b < 0 || cyclic_distance(m, a, b) == 1 || !chord_skips(m, a, b, j)) continue;
    if (is_same(F, e)) set_different(G, e);
    else set_same(G, e);
  }
  set_same(G, target);
  return G;
}

}  // namespace listagree
