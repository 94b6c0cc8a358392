#pragma once

#include "listagree/complex.hpp"
#include "listagree/group.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace listagree {

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Group-valued function on the dim-faces of a complex, dim in [-1, 2]. A
// 1-cochain stores f(u,v) for u < v; reversed reads return the inverse. A
// 2-cochain holds f(a,b)f(b,c)f(c,a) for sorted triangles (a,b,c) and exists
// only as the output of the coboundary of a 1-cochain.
class Cochain {
 public:
  Cochain(ComplexPtr base, GroupPtr group, int dim);
  Cochain(ComplexPtr base, GroupPtr group, int dim, std::vector<Element> values);

  int dim() const { return dim_; }
  const SimplicialComplex& base() const { return *base_; }
  const ComplexPtr& base_ptr() const { return base_; }
  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return values_.size(); }

  Element at(std::size_t face_index) const { return values_[face_index]; }
  void set(std::size_t face_index, Element g) { values_[face_index] = g; }
  const std::vector<Element>& values() const { return values_; }

  // Value on an oriented face. For dim 1 any vertex order is accepted.
  Element value(Vertex u, Vertex v) const;
  Element value(const Face& face) const;

  bool operator==(const Cochain& o) const { return dim_ == o.dim_ && base_ == o.base_ && values_ == o.values_; }

 private:
  ComplexPtr base_;
  GroupPtr group_;
  int dim_;
  std::vector<Element> values_;
};

Cochain random_cochain(ComplexPtr base, GroupPtr group, int dim, Rng& rng);

// d_{-1} f(v) = f(∅); d_0 f(u,v) = f(u) f(v)^{-1}; d_1 f(u,v,w) = f(u,v) f(v,w) f(w,u).
Cochain apply_coboundary(const Cochain& f);

bool is_cocycle(const Cochain& f);

// Spanning-tree witness g with d_0 g = f (roots: lowest vertex of each
// component, identity at the root), or nothing when f is not a coboundary.
std::optional<Cochain> coboundary_witness(const Cochain& f);
inline bool is_coboundary(const Cochain& f) { return coboundary_witness(f).has_value(); }

// Weight numerator of the support over base().weight_denominator(dim).
std::uint64_t support_count(const Cochain& f);
Rational cochain_norm(const Cochain& f);
// ‖f1 f2^{-1}‖; throws BaseMismatch.
Rational cochain_dist(const Cochain& f1, const Cochain& f2);
std::uint64_t disagreement_count(const Cochain& f1, const Cochain& f2);

// Pointwise f1·f2 (same base and dimension).
Cochain pointwise_product(const Cochain& f1, const Cochain& f2);
Cochain pointwise_inverse(const Cochain& f);

}  // namespace listagree
