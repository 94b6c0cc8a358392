#pragma once

#include "listagree/cochain.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace listagree {

struct NearestCoboundary {
  Cochain nearest;
  Cochain witness;  // nearest = d_0 witness
  Rational distance;
};

// All coboundaries d_0 g of a base, enumerated once (g fixed to the identity at
// the lowest vertex of each component). Throws SearchSpaceTooLarge when the
// enumeration exceeds `limit` elements.
class CoboundarySpace {
 public:
  CoboundarySpace(ComplexPtr base, GroupPtr group, std::uint64_t limit = 1ULL << 22);

  std::size_t size() const { return witnesses_.size(); }
  const SimplicialComplex& base() const { return *base_; }

  // Weight numerator (over weight_denominator(1)) of the distance to the nearest coboundary.
  std::uint64_t distance_count(const std::vector<Element>& f) const;
  // Same for an order-2 group, with bit e set iff the edge value is not the identity.
  std::uint64_t distance_count_mask(std::uint64_t f) const;
  bool has_mask_path() const { return mask_path_; }
  std::uint64_t edge_weight_mask(std::uint64_t mask) const;

  NearestCoboundary nearest(const Cochain& f) const;

 private:
  std::size_t argmin(const std::vector<Element>& f) const;

  ComplexPtr base_;
  GroupPtr group_;
  std::vector<std::vector<Element>> witnesses_;
  std::vector<std::vector<Element>> coboundaries_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::array<std::uint64_t, 256>> chunk_weights_;
  bool mask_path_ = false;
};

NearestCoboundary nearest_coboundary(const Cochain& f);

// Exhaustive distance to the 1-cocycles (enumerates all 1-cochains).
Rational dist_to_cocycles(const Cochain& f, std::uint64_t limit = 1ULL << 22);

struct CheegerResult {
  bool infinite = true;  // no cochain outside the denominator space
  Rational value = 0;
  std::uint64_t examined = 0;
};

enum class H1Denominator { Coboundaries, Cocycles };

// min over g not constant of ‖d_0 g‖ / dist(g, constants).
CheegerResult cheeger_h0(const ComplexPtr& X, const GroupPtr& G, std::uint64_t limit = 1ULL << 22);
// min over f outside the denominator space of ‖d_1 f‖ / dist(f, space).
CheegerResult cheeger_h1(const ComplexPtr& X, const GroupPtr& G, H1Denominator denominator,
                         std::uint64_t limit = 1ULL << 24);

struct LinkExpansion {
  Face face;
  CheegerResult h0;
  CheegerResult h1_coboundary;
  std::optional<CheegerResult> h1_cocycle;
};

struct GammaReport {
  // Minimum of h0 and h1 (coboundary variant) over the links; empty when every value is infinite.
  std::optional<Rational> gamma;
  std::optional<Rational> gamma_cocycle_variant;
  std::vector<LinkExpansion> links;
};

// Links of every face of dimension < d-2, the empty face included.
GammaReport measure_gamma(const ComplexPtr& X, const GroupPtr& G, bool cocycle_variant = true);

}  // namespace listagree
