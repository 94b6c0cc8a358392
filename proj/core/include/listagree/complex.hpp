#pragma once

#include "listagree/rational.hpp"
#include "listagree/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace listagree {

using Vertex = int;
// Strictly increasing vertex list; the empty face has dimension -1.
using Face = std::vector<Vertex>;

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

Face make_face(std::vector<Vertex> vertices);
int face_dim(const Face& f);
bool is_subface(const Face& small, const Face& big);
Face face_union(const Face& a, const Face& b);
Face face_intersection(const Face& a, const Face& b);
Face face_difference(const Face& a, const Face& b);
// All subsets of `f` with exactly `size` elements, lexicographic.
std::vector<Face> subsets_of_size(const Face& f, int size);

// Pure complex with the canonical weight: w(s) = #{maximal faces containing s} / (C(d+1,|s|)·|X(d)|).
class SimplicialComplex {
 public:
  // Throws MixedDimensions when the maximal faces differ in size; duplicates are merged.
  static SimplicialComplex build(std::vector<Face> maximal_faces);

  int dim() const { return d_; }
  const std::vector<Face>& maximal_faces() const { return faces_.back(); }
  // Faces of dimension i in lexicographic order, i in [-1, d].
  const std::vector<Face>& faces(int i) const;
  std::size_t count(int i) const { return faces(i).size(); }
  const std::vector<Vertex>& vertex_labels() const { return labels_; }

  std::optional<std::size_t> index_of(const Face& f) const;
  // Throws FaceNotInComplex.
  std::size_t require_index(const Face& f) const;
  bool contains(const Face& f) const { return index_of(f).has_value(); }
  std::size_t vertex_index(Vertex v) const { return require_index(Face{v}); }

  // Weight numerator (containing maximal faces) and the per-dimension denominator.
  std::uint64_t weight_count(int i, std::size_t idx) const { return counts_[i + 1][idx]; }
  std::uint64_t weight_denominator(int i) const;
  Rational weight(int i, std::size_t idx) const;
  // Throws FaceNotInComplex.
  Rational weight(const Face& f) const;

 private:
  int d_ = -1;
  std::vector<Vertex> labels_;
  std::vector<std::vector<Face>> faces_;
  std::vector<std::unordered_map<Face, std::size_t, FaceHash>> index_;
  std::vector<std::vector<std::uint64_t>> counts_;
};

// Sum of weights; all faces must share one dimension (MixedDimensions otherwise).
Rational norm(const SimplicialComplex& X, const std::vector<Face>& S);

// All j-faces containing a member of S.
std::vector<Face> containment_up(const SimplicialComplex& X, const std::vector<Face>& S, int j);

// Faces t \ s for t containing s; throws FaceNotInComplex or TopDimensionalFace.
SimplicialComplex link(const SimplicialComplex& X, const Face& s);

// Faces of dimension at most i, reweighted with top dimension i.
SimplicialComplex skeleton(const SimplicialComplex& X, int i);

// Uniform maximal face, then a uniform (i+1)-subset of it.
Face sample_face(const SimplicialComplex& X, int i, Rng& rng);

// Exact law of sample_face, enumerated over all draws.
std::vector<std::pair<Face, Rational>> face_distribution(const SimplicialComplex& X, int i);

}  // namespace listagree
