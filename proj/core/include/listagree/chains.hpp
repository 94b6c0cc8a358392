#pragma once

#include "listagree/complex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace listagree {

// Indicator of a set of dim-faces, aligned with X.faces(dim).
struct F2Chain {
  int dim = 0;
  std::vector<std::uint8_t> bits;

  bool is_zero() const;
  std::size_t weight() const;
};

F2Chain chain_from_faces(const SimplicialComplex& X, const std::vector<Face>& faces);

// Mod-2 count of containing faces; dim-0 chains map to the empty face.
F2Chain boundary(const SimplicialComplex& X, const F2Chain& c);

// True iff c is the boundary of some (dim+1)-chain.
bool is_boundary(const SimplicialComplex& X, const F2Chain& c);

// Cycle helpers; a cycle is a closed vertex list (g_0,...,g_{m-1}) with edges
// {g_t, g_{t+1 mod m}}. Edge t is {g_t, g_{t+1}}.
int cyclic_distance(int m, int a, int b);
// Chord {g_i, g_j} skips edge t iff edge t lies on a shortest arc from g_i to g_j.
bool chord_skips(int m, int i, int j, int t);
int skipped_edge_count(int m, int i, int j);

// Throws NotACycle unless the list is a simple closed walk of length >= 3 in X's 1-skeleton.
void require_simple_cycle(const SimplicialComplex& X, const std::vector<Vertex>& cycle);
// Every chord of the cycle present in X skips at most i cycle edges.
bool is_non_skipping(const SimplicialComplex& X, const std::vector<Vertex>& cycle, int i);
// Largest number of cycle edges skipped by a chord present in X (0 if chordless).
int max_chord_skip(const SimplicialComplex& X, const std::vector<Vertex>& cycle);

// Smallest nonzero 1-cycle that is not a boundary, by exhaustion over edge
// subsets in order of size. Throws SearchSpaceTooLarge above `max_edges` edges.
std::optional<F2Chain> minimal_homology_cycle(const SimplicialComplex& X, std::size_t max_edges = 20);

// Orders the edges of a connected 2-regular chain into a vertex cycle; throws NotASimpleCycle otherwise.
std::vector<Vertex> chain_as_cycle(const SimplicialComplex& X, const F2Chain& c);

}  // namespace listagree
