#include "listagree/chains.hpp"

#include "listagree/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace listagree {

namespace {

// Row-reduced basis of a subspace of F2^n.
class F2Basis {
 public:
  explicit F2Basis(std::size_t n) : words_((n + 63) / 64) {}

  void insert(std::vector<std::uint64_t> v) {
    reduce(v);
    const auto p = pivot(v);
    if (p < 0) return;
    rows_.emplace_back(p, std::move(v));
  }

  bool contains(std::vector<std::uint64_t> v) const {
    reduce(v);
    return pivot(v) < 0;
  }

  std::vector<std::uint64_t> empty() const { return std::vector<std::uint64_t>(words_, 0); }

 private:
  static long pivot(const std::vector<std::uint64_t>& v) {
    for (std::size_t w = 0; w < v.size(); ++w)
      if (v[w]) return static_cast<long>(w * 64 + std::countr_zero(v[w]));
    return -1;
  }

  void reduce(std::vector<std::uint64_t>& v) const {
    for (const auto& [p, row] : rows_) {
      if ((v[p / 64] >> (p % 64)) & 1u)
        for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= row[w];
    }
  }

  std::size_t words_;
  std::vector<std::pair<long, std::vector<std::uint64_t>>> rows_;
};

}  // namespace

bool F2Chain::is_zero() const {
  return std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 0; });
}

std::size_t F2Chain::weight() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

F2Chain chain_from_faces(const SimplicialComplex& X, const std::vector<Face>& faces) {
  if (faces.empty()) throw Error(ErrorKind::InvalidParams, "empty face list has no dimension");
  F2Chain c{face_dim(faces.front()), std::vector<std::uint8_t>(X.count(face_dim(faces.front())), 0)};
  for (const auto& f : faces) {
    if (face_dim(f) != c.dim) throw Error(ErrorKind::MixedDimensions, "chain faces differ in dimension");
    c.bits[X.require_index(f)] ^= 1;
  }
  return c;
}

F2Chain boundary(const SimplicialComplex& X, const F2Chain& c) {
  if (c.dim < 0) throw Error(ErrorKind::DimensionOutOfRange, "boundary of a (-1)-chain");
  F2Chain out{c.dim - 1, std::vector<std::uint8_t>(X.count(c.dim - 1), 0)};
  const auto& faces = X.faces(c.dim);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (!c.bits[i]) continue;
    for (std::size_t drop = 0; drop < faces[i].size(); ++drop) {
      Face sub = faces[i];
      sub.erase(sub.begin() + static_cast<long>(drop));
      out.bits[X.require_index(sub)] ^= 1;
    }
  }
  return out;
}

bool is_boundary(const SimplicialComplex& X, const F2Chain& c) {
  if (c.is_zero()) return true;
  if (c.dim + 1 > X.dim()) return false;
  const std::size_t n = X.count(c.dim);
  F2Basis basis(n);
  const auto& upper = X.faces(c.dim + 1);
  for (std::size_t i = 0; i < upper.size(); ++i) {
    F2Chain single{c.dim + 1, std::vector<std::uint8_t>(upper.size(), 0)};
    single.bits[i] = 1;
    auto b = boundary(X, single);
    auto v = basis.empty();
    for (std::size_t j = 0; j < n; ++j)
      if (b.bits[j]) v[j / 64] |= 1ULL << (j % 64);
    basis.insert(std::move(v));
  }
  auto v = basis.empty();
  for (std::size_t j = 0; j < n; ++j)
    if (c.bits[j]) v[j / 64] |= 1ULL << (j % 64);
  return basis.contains(std::move(v));
}

int cyclic_distance(int m, int a, int b) {
  const int diff = ((a - b) % m + m) % m;
  return std::min(diff, m - diff);
}

bool chord_skips(int m, int i, int j, int t) {
  const int t1 = (t + 1) % m;
  const int d = cyclic_distance(m, i, j);
  const int via = std::min(cyclic_distance(m, i, t) + 1 + cyclic_distance(m, t1, j),
                           cyclic_distance(m, i, t1) + 1 + cyclic_distance(m, t, j));
  return d == via;
}

int skipped_edge_count(int m, int i, int j) {
  int count = 0;
  for (int t = 0; t < m; ++t)
    if (chord_skips(m, i, j, t)) ++count;
  return count;
}

void require_simple_cycle(const SimplicialComplex& X, const std::vector<Vertex>& cycle) {
  const int m = static_cast<int>(cycle.size());
  if (m < 3) throw Error(ErrorKind::NotACycle, "a cycle needs at least 3 vertices");
  std::set<Vertex> seen(cycle.begin(), cycle.end());
  if (static_cast<int>(seen.size()) != m) throw Error(ErrorKind::NotACycle, "repeated vertex");
  for (int t = 0; t < m; ++t) {
    if (!X.contains(make_face({cycle[t], cycle[(t + 1) % m]})))
      throw Error(ErrorKind::NotACycle, "missing edge at position " + std::to_string(t));
  }
}

int max_chord_skip(const SimplicialComplex& X, const std::vector<Vertex>& cycle) {
  require_simple_cycle(X, cycle);
  const int m = static_cast<int>(cycle.size());
  int worst = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (X.contains(make_face({cycle[i], cycle[j]}))) worst = std::max(worst, skipped_edge_count(m, i, j));
    }
  }
  return worst;
}

bool is_non_skipping(const SimplicialComplex& X, const std::vector<Vertex>& cycle, int i) {
  return max_chord_skip(X, cycle) <= i;
}

std::optional<F2Chain> minimal_homology_cycle(const SimplicialComplex& X, std::size_t max_edges) {
  if (X.dim() < 1) return std::nullopt;
  const auto& edges = X.faces(1);
  const std::size_t E = edges.size();
  if (E > max_edges || E > 30) throw Error(ErrorKind::SearchSpaceTooLarge, std::to_string(E) + " edges");
  if (X.count(0) > 64) throw Error(ErrorKind::SearchSpaceTooLarge, "more than 64 vertices");

  std::vector<std::uint64_t> touch(E);
  for (std::size_t e = 0; e < E; ++e)
    touch[e] = (1ULL << X.vertex_index(edges[e][0])) | (1ULL << X.vertex_index(edges[e][1]));
  F2Basis boundaries(E);
  if (X.dim() >= 2) {
    for (const auto& t : X.faces(2)) {
      std::vector<std::uint64_t> v(1, 0);
      for (const auto& e : subsets_of_size(t, 2)) v[0] |= 1ULL << X.require_index(e);
      boundaries.insert(std::move(v));
    }
  }
  for (std::size_t size = 3; size <= E; ++size) {
    for (const auto& pick : subsets_of_size([&] {
           Face all(E);
           for (std::size_t e = 0; e < E; ++e) all[e] = static_cast<Vertex>(e);
           return all;
         }(), static_cast<int>(size))) {
      std::uint64_t parity = 0, mask = 0;
      for (Vertex e : pick) {
        parity ^= touch[e];
        mask |= 1ULL << e;
      }
      if (parity != 0) continue;
      if (boundaries.contains(std::vector<std::uint64_t>{mask})) continue;
      F2Chain c{1, std::vector<std::uint8_t>(E, 0)};
      for (Vertex e : pick) c.bits[e] = 1;
      return c;
    }
  }
  return std::nullopt;
}

std::vector<Vertex> chain_as_cycle(const SimplicialComplex& X, const F2Chain& c) {
  if (c.dim != 1) throw Error(ErrorKind::NotASimpleCycle, "not an edge chain");
  std::map<Vertex, std::vector<Vertex>> adj;
  const auto& edges = X.faces(1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!c.bits[e]) continue;
    adj[edges[e][0]].push_back(edges[e][1]);
    adj[edges[e][1]].push_back(edges[e][0]);
  }
  if (adj.empty()) throw Error(ErrorKind::NotASimpleCycle, "empty chain");
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) throw Error(ErrorKind::NotASimpleCycle, "vertex of degree " + std::to_string(nb.size()));
  std::vector<Vertex> cycle{adj.begin()->first};
  Vertex prev = cycle[0];
  Vertex cur = std::min(adj.begin()->second[0], adj.begin()->second[1]);
  while (cur != cycle[0]) {
    cycle.push_back(cur);
    const auto& nb = adj[cur];
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != adj.size()) throw Error(ErrorKind::NotASimpleCycle, "chain is not connected");
  return cycle;
}

}  // namespace listagree
