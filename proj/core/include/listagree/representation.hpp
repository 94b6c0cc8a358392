#pragma once

#include "listagree/cochain.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace listagree {

// R̂_k(X): vertices are the k-faces of X (vertex id = index in X.faces(k));
// for i >= 1 the i-faces are sunflowers {c ∪ {x} : x ∈ s \ c} with a k-element
// core c and petal union s ∈ X(k+i). Carries R̂_{k-1} for k >= 1.
class RepresentationComplex {
 public:
  // Throws DimensionOutOfRange unless 0 <= k < X.dim().
  static std::shared_ptr<const RepresentationComplex> build(ComplexPtr base, int k);

  int k() const { return k_; }
  const SimplicialComplex& base() const { return *base_; }
  const ComplexPtr& base_ptr() const { return base_; }
  const SimplicialComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  // R̂_{k-1}(X), or null for k = 0.
  const std::shared_ptr<const RepresentationComplex>& lower() const { return lower_; }

  const Face& vertex_face(Vertex r) const { return base_->faces(k_)[static_cast<std::size_t>(r)]; }
  Vertex vertex_of(const Face& kface) const { return static_cast<Vertex>(base_->require_index(kface)); }

  // R(t): union of the represented k-faces.
  Face represent(const Face& rface) const;
  // Common pairwise intersection; requires dim >= 1.
  Face core_of(const Face& rface) const;
  // r^c_s as a sorted list of R̂ vertex ids; throws CoreNotInFace.
  Face rep_for_core(const Face& core, const Face& s) const;
  // {r^c_s : c a k-subset of s}; for dim s = k this is the single vertex.
  std::vector<Face> preimages(const Face& s) const;

 private:
  int k_ = 0;
  ComplexPtr base_;
  ComplexPtr complex_;
  std::shared_ptr<const RepresentationComplex> lower_;
};

using RepPtr = std::shared_ptr<const RepresentationComplex>;

// Faces of R̂_k re-derived literally from the set-system definition (subsets of
// X(k) with a face union and a k-element common intersection); for tests.
std::vector<std::vector<Face>> representation_faces_by_definition(const SimplicialComplex& X, int k);

// Algorithm 1: s ∈ X(k+i) by weight, then a uniform core.
Face sample_rep_face(const RepresentationComplex& R, int i, Rng& rng);
// Exact law of sample_rep_face.
std::vector<std::pair<Face, Rational>> rep_face_distribution(const RepresentationComplex& R, int i);

// The pair of mutually inverse maps between R̂_c (faces with core c plus the
// vertices containing c) and the link X_c, keyed by face.
struct CoreLinkIsomorphism {
  Face core;
  std::map<Face, Face> to_link;    // t ↦ R(t) \ c
  std::map<Face, Face> from_link;  // s ↦ r^c_{s ∪ c}
};
CoreLinkIsomorphism core_link_isomorphism(const RepresentationComplex& R, const Face& core);

// The part of f on R̂_k edges whose core is `core` (identity elsewhere).
Cochain restrict_around_core(const Cochain& f, const RepresentationComplex& R, const Face& core);

}  // namespace listagree
