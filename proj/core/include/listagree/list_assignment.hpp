#pragma once

#include "listagree/complex.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace listagree {

// Boolean function on a face: bit j is the value at the face's j-th vertex.
using LocalFunction = std::uint32_t;
// Boolean function on X(0): bit j is the value at the j-th vertex of X.
using GlobalFunction = std::uint64_t;

LocalFunction restrict_global(const SimplicialComplex& X, GlobalFunction f, const Face& face);
// Values of `value` (a local function on `face`) on the vertices of `sub` ⊆ face.
LocalFunction restrict_local(LocalFunction value, const Face& face, const Face& sub);

// One local function per k-face.
class Assignment {
 public:
  Assignment(std::shared_ptr<const SimplicialComplex> base, int k);

  int k() const { return k_; }
  const SimplicialComplex& base() const { return *base_; }
  const std::shared_ptr<const SimplicialComplex>& base_ptr() const { return base_; }
  std::size_t face_count() const { return values_.size(); }
  LocalFunction at(std::size_t face) const { return values_[face]; }
  void set(std::size_t face, LocalFunction v) { values_[face] = v; }

  bool operator==(const Assignment& o) const { return base_ == o.base_ && k_ == o.k_ && values_ == o.values_; }

 private:
  std::shared_ptr<const SimplicialComplex> base_;
  int k_;
  std::vector<LocalFunction> values_;
};

Assignment assignment_from_global(std::shared_ptr<const SimplicialComplex> base, int k, GlobalFunction f);

// An ordered list of l local functions per k-face.
class LAssignment {
 public:
  LAssignment(std::shared_ptr<const SimplicialComplex> base, int k, int l);

  int k() const { return k_; }
  int l() const { return l_; }
  const SimplicialComplex& base() const { return *base_; }
  const std::shared_ptr<const SimplicialComplex>& base_ptr() const { return base_; }
  std::size_t face_count() const { return base_->count(k_); }
  const Face& face(std::size_t i) const { return base_->faces(k_)[i]; }

  LocalFunction entry(std::size_t face, int slot) const { return values_[face * static_cast<std::size_t>(l_) + static_cast<std::size_t>(slot)]; }
  void set_entry(std::size_t face, int slot, LocalFunction v) { values_[face * static_cast<std::size_t>(l_) + static_cast<std::size_t>(slot)] = v; }
  std::vector<LocalFunction> list(std::size_t face) const;

  // The assignment formed by one slot of every list.
  Assignment slice(int slot) const;

  bool operator==(const LAssignment& o) const {
    return base_ == o.base_ && k_ == o.k_ && l_ == o.l_ && values_ == o.values_;
  }

 private:
  std::shared_ptr<const SimplicialComplex> base_;
  int k_;
  int l_;
  std::vector<LocalFunction> values_;
};

// Any two entries of the same list differ on at least two vertices.
bool is_two_locally_differing(const LAssignment& F);

// Σ_s w(s) · #{i : F_i^s ≠ G_i^s} / l, positionally. Throws BaseMismatch.
Rational l_assignment_distance(const LAssignment& F, const LAssignment& G);
// Weight of the faces where the assignments differ. Throws BaseMismatch.
Rational assignment_distance(const Assignment& F, const Assignment& G);

// Entry perms[s](i) of face s holds globals[i] restricted to s; perms are one-line arrays.
LAssignment agreeing_l_assignment(std::shared_ptr<const SimplicialComplex> base, int k,
                                  const std::vector<GlobalFunction>& globals,
                                  const std::vector<std::vector<int>>& perms);

// Random globals (resampled until every list is 2-locally-differing when
// requested) and uniformly random per-face permutations.
LAssignment random_agreeing_l_assignment(std::shared_ptr<const SimplicialComplex> base, int k, int l, Rng& rng,
                                         bool two_locally_differing = true,
                                         std::vector<GlobalFunction>* globals_out = nullptr);

}  // namespace listagree
