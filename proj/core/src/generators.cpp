#include "listagree/generators.hpp"

#include "listagree/error.hpp"

namespace listagree {

SimplicialComplex complete_complex(int n, int d) {
  if (d < 0 || d + 1 > n) throw Error(ErrorKind::InvalidParams, "complete complex needs 0 <= d < n");
  Face all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  return SimplicialComplex::build(subsets_of_size(all, d + 1));
}

SimplicialComplex cycle_graph(int m) { return cycle_with_pendants(m, {}); }

SimplicialComplex cycle_with_pendants(int m, const std::vector<Vertex>& attach_to) {
  if (m < 3) throw Error(ErrorKind::InvalidParams, "a cycle needs at least 3 vertices");
  std::vector<Face> edges;
  for (int i = 0; i < m; ++i) edges.push_back(make_face({i, (i + 1) % m}));
  Vertex next = m;
  for (Vertex v : attach_to) {
    if (v < 0 || v >= m) throw Error(ErrorKind::InvalidParams, "pendant must attach to a cycle vertex");
    edges.push_back(make_face({v, next++}));
  }
  return SimplicialComplex::build(std::move(edges));
}

SimplicialComplex wheel_complex(int m) {
  if (m < 3) throw Error(ErrorKind::InvalidParams, "a wheel needs a rim of at least 3 vertices");
  std::vector<Face> triangles;
  for (int i = 0; i < m; ++i) triangles.push_back(make_face({i, (i + 1) % m, m}));
  return SimplicialComplex::build(std::move(triangles));
}

}  // namespace listagree
