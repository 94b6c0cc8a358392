#pragma once

#include "listagree/cochain.hpp"

#include <set>
#include <utility>
#include <vector>

namespace listagree {

// Y_φ for an S_l 1-cochain φ: cover vertex [v, s] has id (index of v)·l + s; a
// set of cover vertices over a base face is a face iff s_i = φ(v_i, v_j)(s_j)
// for every pair.
class NearCover {
 public:
  explicit NearCover(Cochain phi);

  int sheets() const { return l_; }
  const SimplicialComplex& base() const { return phi_.base(); }
  const Cochain& cochain() const { return phi_; }

  Vertex cover_vertex(Vertex base_vertex, int sheet) const;
  std::pair<Vertex, int> project(Vertex cover_vertex) const;
  Face project_face(const Face& cover_face) const;

  // All faces of Y by dimension 0..d (dimension -1 omitted), each sorted.
  const std::vector<std::vector<Face>>& faces() const { return faces_; }
  bool has_face(const Face& cover_face) const;
  // Lifts of a base face (one per consistent starting sheet of its first vertex).
  std::vector<Face> lifts(const Face& base_face) const;

 private:
  Cochain phi_;
  int l_;
  std::vector<std::vector<Face>> faces_;
  std::set<Face> face_set_;
};

NearCover near_cover_from_cochain(const Cochain& phi);

// Checks the cover axioms directly: every Y face projects injectively, the
// up-set of every Y face maps bijectively onto the up-set of its image, and
// every nonempty base face has exactly l preimages.
bool is_genuine_cover(const NearCover& Y);

// Unique lift of a base walk from [path_0, start_sheet]; throws NotGenuine for
// a near cover that is not a cover.
std::vector<std::pair<Vertex, int>> lift_path(const NearCover& Y, const std::vector<Vertex>& path, int start_sheet);

struct CoverDecomposition {
  // copies[j][i]: faces of copy j in dimension i.
  std::vector<std::vector<std::vector<Face>>> copies;
  // sheet_of[j][v]: sheet of base vertex index v inside copy j.
  std::vector<std::vector<int>> sheet_of;
};

// Copy j uses sheet g(v)(j) over v. Throws NotACoboundary unless d_0 g = φ.
CoverDecomposition decompose_cover(const NearCover& Y, const Cochain& g);
// Disjoint, covering, and each copy isomorphic to the base via projection.
bool verify_decomposition(const NearCover& Y, const CoverDecomposition& D);

}  // namespace listagree
