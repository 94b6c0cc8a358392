#include "listagree/expansion.hpp"

#include "listagree/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

namespace listagree {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit, const char* what) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > limit / std::max<std::uint64_t>(base, 1)) throw Error(ErrorKind::SearchSpaceTooLarge, what);
    r *= base;
  }
  if (r > limit) throw Error(ErrorKind::SearchSpaceTooLarge, what);
  return r;
}

// Advances an odometer over G^n; returns false after the last value.
bool next_assignment(std::vector<Element>& v, std::size_t order, const std::vector<bool>* frozen = nullptr) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (frozen && (*frozen)[i]) continue;
    if (++v[i] < order) return true;
    v[i] = 0;
  }
  return false;
}

struct Ratio {
  std::uint64_t num = 1, den = 0;  // den == 0 encodes +infinity
  bool less(std::uint64_t n, std::uint64_t d) const {
    if (den == 0) return true;
    return static_cast<u128>(n) * den < static_cast<u128>(num) * d;
  }
};

// Triangle (a,b,c) edges as indices of ab, bc, ac.
std::vector<std::array<std::size_t, 3>> triangle_edges(const SimplicialComplex& X) {
  std::vector<std::array<std::size_t, 3>> out;
  if (X.dim() < 2) return out;
  for (const auto& t : X.faces(2))
    out.push_back({X.require_index(Face{t[0], t[1]}), X.require_index(Face{t[1], t[2]}),
                   X.require_index(Face{t[0], t[2]})});
  return out;
}

std::vector<std::array<std::uint64_t, 256>> chunk_tables(const SimplicialComplex& X, int dim) {
  const std::size_t n = X.count(dim);
  std::vector<std::array<std::uint64_t, 256>> tables((n + 7) / 8);
  for (std::size_t c = 0; c < tables.size(); ++c) {
    for (std::size_t m = 0; m < 256; ++m) {
      std::uint64_t s = 0;
      for (std::size_t b = 0; b < 8; ++b)
        if (((m >> b) & 1u) && c * 8 + b < n) s += X.weight_count(dim, c * 8 + b);
      tables[c][m] = s;
    }
  }
  return tables;
}

std::uint64_t masked_weight(const std::vector<std::array<std::uint64_t, 256>>& tables, std::uint64_t mask) {
  std::uint64_t s = 0;
  for (std::size_t c = 0; c < tables.size() && mask; ++c, mask >>= 8) s += tables[c][mask & 0xFF];
  return s;
}

// Root flags: the lowest vertex of each connected component of the 1-skeleton.
std::vector<bool> component_roots(const SimplicialComplex& X) {
  const std::size_t n = X.count(0);
  std::vector<std::vector<std::size_t>> adj(n);
  if (X.dim() >= 1)
    for (const auto& e : X.faces(1)) {
      adj[X.vertex_index(e[0])].push_back(X.vertex_index(e[1]));
      adj[X.vertex_index(e[1])].push_back(X.vertex_index(e[0]));
    }
  std::vector<bool> root(n, false), seen(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    root[r] = true;
    seen[r] = true;
    std::queue<std::size_t> q;
    q.push(r);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto w : adj[u])
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
  }
  return root;
}

std::uint64_t mask_of(const std::vector<Element>& v) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != FiniteGroup::identity()) m |= 1ULL << i;
  return m;
}

}  // namespace

CoboundarySpace::CoboundarySpace(ComplexPtr base, GroupPtr group, std::uint64_t limit)
    : base_(std::move(base)), group_(std::move(group)) {
  const auto& X = *base_;
  const auto& G = *group_;
  if (X.dim() < 1) throw Error(ErrorKind::DimensionOutOfRange, "coboundaries need edges");
  const auto roots = component_roots(X);
  const std::size_t free = static_cast<std::size_t>(std::count(roots.begin(), roots.end(), false));
  checked_power(G.order(), free, limit, "coboundary enumeration");
  const auto& edges = X.faces(1);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& e : edges) ends.emplace_back(X.vertex_index(e[0]), X.vertex_index(e[1]));
  std::vector<Element> g(X.count(0), 0);
  do {
    std::vector<Element> d(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) d[e] = G.mul(g[ends[e].first], G.inv(g[ends[e].second]));
    witnesses_.push_back(g);
    coboundaries_.push_back(std::move(d));
  } while (next_assignment(g, G.order(), &roots));
  mask_path_ = G.order() == 2 && edges.size() <= 64;
  if (mask_path_) {
    for (const auto& c : coboundaries_) masks_.push_back(mask_of(c));
    chunk_weights_ = chunk_tables(X, 1);
  }
}

std::uint64_t CoboundarySpace::edge_weight_mask(std::uint64_t mask) const { return masked_weight(chunk_weights_, mask); }

std::uint64_t CoboundarySpace::distance_count_mask(std::uint64_t f) const {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (auto b : masks_) {
    best = std::min(best, masked_weight(chunk_weights_, f ^ b));
    if (best == 0) break;
  }
  return best;
}

std::size_t CoboundarySpace::argmin(const std::vector<Element>& f) const {
  std::size_t best_i = 0;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  if (mask_path_) {
    const auto fm = mask_of(f);
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      const auto w = masked_weight(chunk_weights_, fm ^ masks_[i]);
      if (w < best) {
        best = w;
        best_i = i;
      }
    }
    return best_i;
  }
  for (std::size_t i = 0; i < coboundaries_.size(); ++i) {
    std::uint64_t w = 0;
    const auto& c = coboundaries_[i];
    for (std::size_t e = 0; e < f.size() && w < best; ++e)
      if (f[e] != c[e]) w += base_->weight_count(1, e);
    if (w < best) {
      best = w;
      best_i = i;
    }
  }
  return best_i;
}

std::uint64_t CoboundarySpace::distance_count(const std::vector<Element>& f) const {
  if (mask_path_) return distance_count_mask(mask_of(f));
  const auto& c = coboundaries_[argmin(f)];
  std::uint64_t w = 0;
  for (std::size_t e = 0; e < f.size(); ++e)
    if (f[e] != c[e]) w += base_->weight_count(1, e);
  return w;
}

NearestCoboundary CoboundarySpace::nearest(const Cochain& f) const {
  if (f.dim() != 1 || &f.base() != base_.get()) throw Error(ErrorKind::BaseMismatch, "cochain not on this base");
  const auto i = argmin(f.values());
  Cochain near(base_, group_, 1, coboundaries_[i]);
  Cochain wit(base_, group_, 0, witnesses_[i]);
  auto dist = cochain_dist(f, near);
  return NearestCoboundary{std::move(near), std::move(wit), std::move(dist)};
}

NearestCoboundary nearest_coboundary(const Cochain& f) {
  CoboundarySpace space(f.base_ptr(), f.group_ptr());
  return space.nearest(f);
}

Rational dist_to_cocycles(const Cochain& f, std::uint64_t limit) {
  const auto& X = f.base();
  const auto& G = f.group();
  const auto tris = triangle_edges(X);
  checked_power(G.order(), X.count(1), limit, "cocycle enumeration");
  std::vector<Element> z(X.count(1), 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  do {
    bool cocycle = true;
    for (const auto& t : tris)
      if (G.mul(G.mul(z[t[0]], z[t[1]]), G.inv(z[t[2]])) != FiniteGroup::identity()) {
        cocycle = false;
        break;
      }
    if (!cocycle) continue;
    std::uint64_t w = 0;
    for (std::size_t e = 0; e < z.size(); ++e)
      if (z[e] != f.at(e)) w += X.weight_count(1, e);
    best = std::min(best, w);
  } while (next_assignment(z, G.order()));
  return Rational(best, X.weight_denominator(1));
}

CheegerResult cheeger_h0(const ComplexPtr& Xp, const GroupPtr& Gp, std::uint64_t limit) {
  const auto& X = *Xp;
  const auto& G = *Gp;
  CheegerResult res;
  if (X.dim() < 1) return res;
  const std::size_t n = X.count(0);
  checked_power(G.order(), n, limit, "0-cochain enumeration");
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& e : X.faces(1)) ends.emplace_back(X.vertex_index(e[0]), X.vertex_index(e[1]));
  Ratio best;
  std::vector<Element> g(n, 0);
  std::vector<std::uint64_t> per_value(G.order());
  do {
    ++res.examined;
    std::fill(per_value.begin(), per_value.end(), 0);
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < n; ++v) {
      per_value[g[v]] += X.weight_count(0, v);
      total += X.weight_count(0, v);
    }
    const std::uint64_t dist = total - *std::max_element(per_value.begin(), per_value.end());
    if (dist == 0) continue;
    std::uint64_t cob = 0;
    for (std::size_t e = 0; e < ends.size(); ++e)
      if (g[ends[e].first] != g[ends[e].second]) cob += X.weight_count(1, e);
    // ratio = (cob / D1) / (dist / D0)
    const std::uint64_t num = cob * X.weight_denominator(0);
    const std::uint64_t den = dist * X.weight_denominator(1);
    if (best.less(num, den)) best = Ratio{num, den};
  } while (next_assignment(g, G.order()));
  if (best.den != 0) {
    res.infinite = false;
    res.value = Rational(best.num, best.den);
  }
  return res;
}

CheegerResult cheeger_h1(const ComplexPtr& Xp, const GroupPtr& Gp, H1Denominator denominator, std::uint64_t limit) {
  const auto& X = *Xp;
  const auto& G = *Gp;
  CheegerResult res;
  if (X.dim() < 2) throw Error(ErrorKind::DimensionOutOfRange, "h1 needs triangles");
  const std::size_t E = X.count(1);
  const auto total = checked_power(G.order(), E, limit, "1-cochain enumeration");
  const auto tris = triangle_edges(X);
  const std::uint64_t D1 = X.weight_denominator(1), D2 = X.weight_denominator(2);
  Ratio best;

  if (G.order() == 2 && E <= 64) {
    std::vector<std::uint64_t> tri_masks;
    for (const auto& t : tris) tri_masks.push_back((1ULL << t[0]) | (1ULL << t[1]) | (1ULL << t[2]));
    const auto tri_weight = [&](std::uint64_t f) {
      std::uint64_t w = 0;
      for (std::size_t t = 0; t < tri_masks.size(); ++t)
        if (std::popcount(f & tri_masks[t]) & 1) w += X.weight_count(2, t);
      return w;
    };
    const auto edge_tables = chunk_tables(X, 1);
    std::vector<std::uint64_t> space;
    if (denominator == H1Denominator::Coboundaries) {
      const auto roots = component_roots(X);
      std::vector<Element> g(X.count(0), 0);
      do {
        std::uint64_t m = 0;
        for (std::size_t e = 0; e < E; ++e) {
          const auto& ed = X.faces(1)[e];
          if (g[X.vertex_index(ed[0])] != g[X.vertex_index(ed[1])]) m |= 1ULL << e;
        }
        space.push_back(m);
      } while (next_assignment(g, 2, &roots));
    } else {
      for (std::uint64_t f = 0; f < total; ++f)
        if (tri_weight(f) == 0) space.push_back(f);
    }
    for (std::uint64_t f = 0; f < total; ++f) {
      ++res.examined;
      std::uint64_t dist = std::numeric_limits<std::uint64_t>::max();
      for (auto s : space) {
        dist = std::min(dist, masked_weight(edge_tables, f ^ s));
        if (dist == 0) break;
      }
      if (dist == 0) continue;
      const std::uint64_t num = tri_weight(f) * D1;
      const std::uint64_t den = dist * D2;
      if (best.less(num, den)) best = Ratio{num, den};
    }
  } else {
    const auto tri_weight = [&](const std::vector<Element>& f) {
      std::uint64_t w = 0;
      for (std::size_t t = 0; t < tris.size(); ++t)
        if (G.mul(G.mul(f[tris[t][0]], f[tris[t][1]]), G.inv(f[tris[t][2]])) != FiniteGroup::identity())
          w += X.weight_count(2, t);
      return w;
    };
    std::vector<std::vector<Element>> space;
    if (denominator == H1Denominator::Coboundaries) {
      const auto roots = component_roots(X);
      std::vector<Element> g(X.count(0), 0);
      do {
        std::vector<Element> d(E);
        for (std::size_t e = 0; e < E; ++e) {
          const auto& ed = X.faces(1)[e];
          d[e] = G.mul(g[X.vertex_index(ed[0])], G.inv(g[X.vertex_index(ed[1])]));
        }
        space.push_back(std::move(d));
      } while (next_assignment(g, G.order(), &roots));
    } else {
      std::vector<Element> z(E, 0);
      do {
        if (tri_weight(z) == 0) space.push_back(z);
      } while (next_assignment(z, G.order()));
    }
    if (static_cast<u128>(space.size()) * total > (static_cast<u128>(limit) << 6))
      throw Error(ErrorKind::SearchSpaceTooLarge, "cochain pairs");
    std::vector<Element> f(E, 0);
    do {
      ++res.examined;
      std::uint64_t dist = std::numeric_limits<std::uint64_t>::max();
      for (const auto& s : space) {
        std::uint64_t w = 0;
        for (std::size_t e = 0; e < E && w < dist; ++e)
          if (f[e] != s[e]) w += X.weight_count(1, e);
        dist = std::min(dist, w);
        if (dist == 0) break;
      }
      if (dist == 0) continue;
      const std::uint64_t num = tri_weight(f) * D1;
      const std::uint64_t den = dist * D2;
      if (best.less(num, den)) best = Ratio{num, den};
    } while (next_assignment(f, G.order()));
  }
  if (best.den != 0) {
    res.infinite = false;
    res.value = Rational(best.num, best.den);
  }
  return res;
}

GammaReport measure_gamma(const ComplexPtr& X, const GroupPtr& G, bool cocycle_variant) {
  GammaReport rep;
  for (int i = -1; i < X->dim() - 2; ++i) {
    for (const auto& s : X->faces(i)) {
      ComplexPtr L = s.empty() ? X : std::make_shared<const SimplicialComplex>(link(*X, s));
      LinkExpansion le{s, cheeger_h0(L, G), cheeger_h1(L, G, H1Denominator::Coboundaries), std::nullopt};
      if (cocycle_variant) le.h1_cocycle = cheeger_h1(L, G, H1Denominator::Cocycles);
      for (const auto* h : {&le.h0, &le.h1_coboundary}) {
        if (h->infinite) continue;
        if (!rep.gamma || h->value < *rep.gamma) rep.gamma = h->value;
      }
      if (le.h1_cocycle) {
        for (const auto* h : {&le.h0, &*le.h1_cocycle}) {
          if (h->infinite) continue;
          if (!rep.gamma_cocycle_variant || h->value < *rep.gamma_cocycle_variant) rep.gamma_cocycle_variant = h->value;
        }
      }
      rep.links.push_back(std::move(le));
    }
  }
  return rep;
}

}  // namespace listagree
