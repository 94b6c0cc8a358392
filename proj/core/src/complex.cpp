#include "listagree/complex.hpp"

#include "listagree/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace listagree {

namespace {

std::string face_text(const Face& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "]";
}

}  // namespace

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::uint64_t h = 0x243F6A8885A308D3ULL ^ f.size();
  for (Vertex v : f) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
  return static_cast<std::size_t>(h);
}

Face make_face(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

bool is_subface(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_intersection(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_difference(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Face> subsets_of_size(const Face& f, int size) {
  std::vector<Face> out;
  const int n = static_cast<int>(f.size());
  if (size < 0 || size > n) return out;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    Face s(size);
    for (int i = 0; i < size; ++i) s[i] = f[idx[i]];
    out.push_back(std::move(s));
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

SimplicialComplex SimplicialComplex::build(std::vector<Face> maximal_faces) {
  if (maximal_faces.empty()) throw Error(ErrorKind::InvalidParams, "no maximal faces");
  std::set<Face> tops;
  for (auto& f : maximal_faces) {
    Face g = make_face(f);
    if (g.size() != f.size()) throw Error(ErrorKind::InvalidParams, "repeated vertex in " + face_text(f));
    tops.insert(std::move(g));
  }
  const std::size_t size = tops.begin()->size();
  for (const auto& f : tops) {
    if (f.size() != size) throw Error(ErrorKind::MixedDimensions, face_text(f));
  }
  if (size == 0) throw Error(ErrorKind::InvalidParams, "maximal faces must be nonempty");

  SimplicialComplex X;
  X.d_ = static_cast<int>(size) - 1;
  std::vector<std::map<Face, std::uint64_t>> by_dim(size + 1);
  for (const auto& top : tops) {
    const int n = static_cast<int>(top.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Face sub;
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) sub.push_back(top[j]);
      ++by_dim[sub.size()][sub];
    }
  }
  X.faces_.resize(size + 1);
  X.index_.resize(size + 1);
  X.counts_.resize(size + 1);
  for (std::size_t s = 0; s <= size; ++s) {
    for (auto& [f, c] : by_dim[s]) {
      X.index_[s].emplace(f, X.faces_[s].size());
      X.faces_[s].push_back(f);
      X.counts_[s].push_back(c);
    }
  }
  for (const auto& f : X.faces_[1]) X.labels_.push_back(f[0]);
  return X;
}

const std::vector<Face>& SimplicialComplex::faces(int i) const {
  if (i < -1 || i > d_) throw Error(ErrorKind::DimensionOutOfRange, "dimension " + std::to_string(i));
  return faces_[i + 1];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Face& f) const {
  if (f.size() > faces_.size() - 1) return std::nullopt;
  const auto& m = index_[f.size()];
  auto it = m.find(f);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::require_index(const Face& f) const {
  auto idx = index_of(f);
  if (!idx) throw Error(ErrorKind::FaceNotInComplex, face_text(f));
  return *idx;
}

std::uint64_t SimplicialComplex::weight_denominator(int i) const {
  return binomial(d_ + 1, i + 1) * static_cast<std::uint64_t>(faces_.back().size());
}

Rational SimplicialComplex::weight(int i, std::size_t idx) const {
  return Rational(counts_.at(i + 1).at(idx), weight_denominator(i));
}

Rational SimplicialComplex::weight(const Face& f) const {
  return weight(face_dim(f), require_index(f));
}

Rational norm(const SimplicialComplex& X, const std::vector<Face>& S) {
  Rational total = 0;
  if (S.empty()) return total;
  const std::size_t size = S.front().size();
  for (const auto& f : S) {
    if (f.size() != size) throw Error(ErrorKind::MixedDimensions, face_text(f));
    total += X.weight(f);
  }
  return total;
}

std::vector<Face> containment_up(const SimplicialComplex& X, const std::vector<Face>& S, int j) {
  std::vector<Face> out;
  for (const auto& t : X.faces(j)) {
    for (const auto& s : S) {
      if (face_dim(s) > j) throw Error(ErrorKind::DimensionOutOfRange, "containment below source dimension");
      if (is_subface(s, t)) {
        out.push_back(t);
        break;
      }
    }
  }
  return out;
}

SimplicialComplex link(const SimplicialComplex& X, const Face& s) {
  X.require_index(s);
  if (face_dim(s) >= X.dim()) throw Error(ErrorKind::TopDimensionalFace, face_text(s));
  std::vector<Face> tops;
  for (const auto& t : X.maximal_faces())
    if (is_subface(s, t)) tops.push_back(face_difference(t, s));
  return SimplicialComplex::build(std::move(tops));
}

SimplicialComplex skeleton(const SimplicialComplex& X, int i) {
  if (i < 0 || i > X.dim()) throw Error(ErrorKind::DimensionOutOfRange, "skeleton " + std::to_string(i));
  return SimplicialComplex::build(X.faces(i));
}

Face sample_face(const SimplicialComplex& X, int i, Rng& rng) {
  if (i < -1 || i > X.dim()) throw Error(ErrorKind::DimensionOutOfRange, "sample dimension");
  const auto& tops = X.maximal_faces();
  Face top = tops[rng.below(tops.size())];
  // Partial Fisher-Yates picks a uniform (i+1)-subset.
  const std::size_t take = static_cast<std::size_t>(i + 1);
  for (std::size_t a = 0; a < take; ++a) {
    std::size_t b = a + rng.below(top.size() - a);
    std::swap(top[a], top[b]);
  }
  top.resize(take);
  std::sort(top.begin(), top.end());
  return top;
}

std::vector<std::pair<Face, Rational>> face_distribution(const SimplicialComplex& X, int i) {
  if (i < -1 || i > X.dim()) throw Error(ErrorKind::DimensionOutOfRange, "sample dimension");
  std::map<Face, std::uint64_t> hits;
  for (const auto& top : X.maximal_faces())
    for (auto& s : subsets_of_size(top, i + 1)) ++hits[s];
  const std::uint64_t total = static_cast<std::uint64_t>(X.maximal_faces().size()) * binomial(X.dim() + 1, i + 1);
  std::vector<std::pair<Face, Rational>> out;
  out.reserve(hits.size());
  for (auto& [f, c] : hits) out.emplace_back(f, Rational(c, total));
  return out;
}

}  // namespace listagree
