#pragma once

#include "listagree/complex.hpp"
#include "listagree/cochain.hpp"
#include "listagree/list_assignment.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace listagree {

// All (d+1)-subsets of {0..n-1}. Throws InvalidParams unless 0 <= d < n.
SimplicialComplex complete_complex(int n, int d);
// The m-cycle 0-1-...-(m-1)-0 as a 1-dimensional complex.
SimplicialComplex cycle_graph(int m);
// The m-cycle with one extra leaf m+j attached to each listed cycle vertex.
SimplicialComplex cycle_with_pendants(int m, const std::vector<Vertex>& attach_to);
// Triangles {i, i+1, m} over the m-cycle 0..m-1; the rim is chordless.
SimplicialComplex wheel_complex(int m);

// Subspace of F_p^N in reduced row echelon form (rows sorted by pivot).
using Subspace = std::vector<std::vector<int>>;
Subspace row_reduce(Subspace rows, int p);
bool subspace_contains(const Subspace& big, const Subspace& small, int p);

struct SphericalBuilding {
  int p = 2;
  int d = 1;
  std::vector<Subspace> subspaces;  // vertex id = index
  SimplicialComplex complex;

  // Throws InvalidParams if `span` is not a proper nontrivial subspace.
  Vertex vertex_of(const std::vector<std::vector<int>>& span) const;
};
// Flag complex of the proper nontrivial subspaces of F_p^{d+2}. Throws
// InvalidParams for non-prime p or d < 1 and SearchSpaceTooLarge beyond p <= 5, d <= 2.
SphericalBuilding spherical_building(int p, int d);

// (V_1, W_{1,1}, U_1, W_{1,2}, V_2, ..., U_{p-1}, W_{p-1,1}) with V_i = <v_i>,
// U_i = <u_i>, W_{i,j} = <u_i, v_j>, v_i = (1,i,0,...), u_i = (1,0,i,0,...).
// Throws InvalidParams for p < 3.
std::vector<Vertex> building_non_skipping_cycle(const SphericalBuilding& B);

// Coloring candidates on the edges of X (k = 1, l = 2). Each edge {a < b} stores
// local functions with bit 0 at a and bit 1 at b. Throw NotASimpleCycle.
LAssignment coloring_even(ComplexPtr X, const std::vector<Vertex>& cycle);
// Edge `glued` of the cycle is {cycle[glued], cycle[glued+1]}.
LAssignment coloring_odd(ComplexPtr X, const std::vector<Vertex>& cycle, int glued);
// Edge j becomes same-colored; every chord skipping edge j swaps same/different.
LAssignment glue(const LAssignment& F, const std::vector<Vertex>& cycle, int j);

// Distance on the cycle with edge `glued` contracted.
int contracted_cycle_distance(int m, int i, int j, int glued);

struct LowerBoundDemo {
  int cycle_length = 0;
  int skip_bound = 0;             // i: every chord skips at most i edges (at least 1)
  std::size_t max_query_size = 0; // largest |Q| < |cycle| / i
  std::uint64_t query_sets = 0;
  std::uint64_t fooled = 0;       // sets with an indistinguishable opposite-status pair
  bool even_candidate_agreeing = false;
  bool odd_candidate_agreeing = false;
};
// For every set Q of at most max_query_size edge queries, finds an edge t skipped
// by no query and checks that a pair of candidates with opposite agreement status
// (decided by the exhaustive oracle) gives identical answers on Q.
LowerBoundDemo lower_bound_demo(ComplexPtr X, const std::vector<Vertex>& cycle);

// Lists hold globals[i] restricted to each k-face in slot i, except the last slot
// of face `special_face`, which holds `special` restricted there. Throws
// PreconditionUnsatisfiable unless l >= 2 and some k-subset of that face sees
// `special` differ from every global.
LAssignment adversarial_l_assignment(ComplexPtr X, int k, const std::vector<GlobalFunction>& globals,
                                     GlobalFunction special, std::size_t special_face);
// The agreeing assignment matching the adversary everywhere except slot `hidden_slot`.
LAssignment fooling_assignment(ComplexPtr X, int k, const std::vector<GlobalFunction>& globals,
                               GlobalFunction special, std::size_t special_face, int hidden_slot);

struct FoolingReport {
  bool adversary_agreeing = true;
  std::uint64_t query_sets = 0;
  std::uint64_t fooled = 0;
};
// Exhaustive over all sets of l-1 (face, slot) queries, using the agreement oracle.
FoolingReport verify_fooling(ComplexPtr X, int k, const std::vector<GlobalFunction>& globals, GlobalFunction special,
                             std::size_t special_face);

}  // namespace listagree
