#include "listagree/error.hpp"
#include "listagree/generators.hpp"

#include <algorithm>
#include <map>

namespace listagree {

namespace {

int mod(int a, int p) { return ((a % p) + p) % p; }

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (mod(a * x, p) == 1) return x;
  throw Error(ErrorKind::InvalidParams, "zero has no inverse");
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// All r-dimensional subspaces of F_p^N in echelon form, by pivot pattern and free entries.
void enumerate_subspaces(int N, int r, int p, std::vector<Subspace>& out) {
  std::vector<int> pivots(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) pivots[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<std::pair<int, int>> free;  // (row, column)
    for (int row = 0; row < r; ++row)
      for (int c = pivots[static_cast<std::size_t>(row)] + 1; c < N; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(row, c);
    std::vector<int> digits(free.size(), 0);
    while (true) {
      Subspace S(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(N), 0));
      for (int row = 0; row < r; ++row) S[static_cast<std::size_t>(row)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(row)])] = 1;
      for (std::size_t f = 0; f < free.size(); ++f)
        S[static_cast<std::size_t>(free[f].first)][static_cast<std::size_t>(free[f].second)] = digits[f];
      out.push_back(std::move(S));
      std::size_t f = 0;
      while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
      if (f == digits.size()) break;
    }
    int i = r - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == N - r + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

Subspace row_reduce(Subspace rows, int p) {
  if (rows.empty()) return rows;
  const std::size_t N = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < N && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && mod(rows[piv][c], p) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const int inv = inverse_mod(mod(rows[rank][c], p), p);
    for (auto& x : rows[rank]) x = mod(x * inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const int factor = mod(rows[r][c], p);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < N; ++j) rows[r][j] = mod(rows[r][j] - factor * rows[rank][j], p);
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

bool subspace_contains(const Subspace& big, const Subspace& small, int p) {
  for (auto row : small) {
    for (const auto& b : big) {
      const auto pc = static_cast<std::size_t>(std::find_if(b.begin(), b.end(), [](int x) { return x != 0; }) - b.begin());
      const int factor = row[pc];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = mod(row[j] - factor * b[j], p);
    }
    if (std::any_of(row.begin(), row.end(), [](int x) { return x != 0; })) return false;
  }
  return true;
}

Vertex SphericalBuilding::vertex_of(const std::vector<std::vector<int>>& span) const {
  const Subspace S = row_reduce(span, p);
  const auto it = std::find(subspaces.begin(), subspaces.end(), S);
  if (it == subspaces.end()) throw Error(ErrorKind::InvalidParams, "not a proper nontrivial subspace");
  return static_cast<Vertex>(it - subspaces.begin());
}

SphericalBuilding spherical_building(int p, int d) {
  if (!is_prime(p) || d < 1) throw Error(ErrorKind::InvalidParams, "spherical building needs prime p and d >= 1");
  if (p > 5 || d > 2) throw Error(ErrorKind::SearchSpaceTooLarge, "spherical building limited to p <= 5, d <= 2");
  const int N = d + 2;
  SphericalBuilding B;
  B.p = p;
  B.d = d;
  std::vector<std::vector<Vertex>> by_dim(static_cast<std::size_t>(N));
  for (int r = 1; r < N; ++r) {
    const std::size_t first = B.subspaces.size();
    enumerate_subspaces(N, r, p, B.subspaces);
    for (std::size_t v = first; v < B.subspaces.size(); ++v) by_dim[static_cast<std::size_t>(r)].push_back(static_cast<Vertex>(v));
  }
  // up[v]: subspaces of one dimension more that contain v.
  std::vector<std::vector<Vertex>> up(B.subspaces.size());
  for (int r = 1; r + 1 < N; ++r)
    for (Vertex a : by_dim[static_cast<std::size_t>(r)])
      for (Vertex b : by_dim[static_cast<std::size_t>(r + 1)])
        if (subspace_contains(B.subspaces[static_cast<std::size_t>(b)], B.subspaces[static_cast<std::size_t>(a)], p))
          up[static_cast<std::size_t>(a)].push_back(b);
  std::vector<Face> flags;
  Face chain;
  const auto extend = [&](auto&& self, Vertex v) -> void {
    chain.push_back(v);
    if (static_cast<int>(chain.size()) == N - 1) flags.push_back(make_face(chain));
    for (Vertex w : up[static_cast<std::size_t>(v)]) self(self, w);
    chain.pop_back();
  };
  for (Vertex v : by_dim[1]) extend(extend, v);
  B.complex = SimplicialComplex::build(std::move(flags));
  return B;
}

std::vector<Vertex> building_non_skipping_cycle(const SphericalBuilding& B) {
  if (B.p < 3) throw Error(ErrorKind::InvalidParams, "the building cycle needs p >= 3");
  const std::size_t N = static_cast<std::size_t>(B.d) + 2;
  const auto v = [&](int i) {
    std::vector<int> x(N, 0);
    x[0] = 1;
    x[1] = i;
    return x;
  };
  const auto u = [&](int i) {
    std::vector<int> x(N, 0);
    x[0] = 1;
    x[2] = i;
    return x;
  };
  std::vector<Vertex> cycle;
  for (int i = 1; i <= B.p - 1; ++i) {
    const int next = i == B.p - 1 ? 1 : i + 1;
    cycle.push_back(B.vertex_of({v(i)}));
    cycle.push_back(B.vertex_of({u(i), v(i)}));
    cycle.push_back(B.vertex_of({u(i)}));
    cycle.push_back(B.vertex_of({u(i), v(next)}));
  }
  return cycle;
}

}  // namespace listagree
