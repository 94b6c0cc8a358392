#include "listagree/cochain.hpp"

#include "listagree/error.hpp"

#include <queue>

namespace listagree {

Cochain::Cochain(ComplexPtr base, GroupPtr group, int dim)
    : base_(std::move(base)), group_(std::move(group)), dim_(dim) {
  if (dim_ < -1 || dim_ > 2 || dim_ > base_->dim())
    throw Error(ErrorKind::DimensionOutOfRange, "cochain dimension " + std::to_string(dim_));
  values_.assign(base_->count(dim_), FiniteGroup::identity());
}

Cochain::Cochain(ComplexPtr base, GroupPtr group, int dim, std::vector<Element> values)
    : Cochain(std::move(base), std::move(group), dim) {
  if (values.size() != values_.size()) throw Error(ErrorKind::InvalidParams, "cochain value count mismatch");
  for (Element g : values)
    if (g >= group_->order()) throw Error(ErrorKind::InvalidParams, "group element out of range");
  values_ = std::move(values);
}

Element Cochain::value(Vertex u, Vertex v) const {
  if (dim_ != 1) throw Error(ErrorKind::InvalidParams, "edge read on a non-edge cochain");
  if (u < v) return values_[base_->require_index(Face{u, v})];
  return group_->inv(values_[base_->require_index(Face{v, u})]);
}

Element Cochain::value(const Face& face) const {
  if (face_dim(face) != dim_) throw Error(ErrorKind::InvalidParams, "face dimension differs from cochain dimension");
  if (dim_ == 1) return value(face[0], face[1]);
  if (dim_ == 2) {
    // Cyclic rotations conjugate the product, so sorted storage is read only in sorted order.
    Face sorted = make_face(face);
    if (sorted != face) throw Error(ErrorKind::InvalidParams, "2-cochains are read in sorted orientation");
  }
  return values_[base_->require_index(face)];
}

Cochain random_cochain(ComplexPtr base, GroupPtr group, int dim, Rng& rng) {
  Cochain f(base, group, dim);
  for (std::size_t i = 0; i < f.size(); ++i) f.set(i, static_cast<Element>(rng.below(group->order())));
  return f;
}

Cochain apply_coboundary(const Cochain& f) {
  const auto& X = f.base();
  const auto& G = f.group();
  if (f.dim() >= 2) throw Error(ErrorKind::DimensionTooHigh, "coboundary above dimension 1");
  Cochain out(f.base_ptr(), f.group_ptr(), f.dim() + 1);
  const auto& faces = X.faces(f.dim() + 1);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Face& s = faces[i];
    Element g = FiniteGroup::identity();
    switch (f.dim()) {
      case -1: g = f.at(0); break;
      case 0:
        g = G.mul(f.at(X.vertex_index(s[0])), G.inv(f.at(X.vertex_index(s[1]))));
        break;
      case 1:
        g = G.mul(G.mul(f.value(s[0], s[1]), f.value(s[1], s[2])), f.value(s[2], s[0]));
        break;
    }
    out.set(i, g);
  }
  return out;
}

bool is_cocycle(const Cochain& f) {
  if (f.dim() != 1) throw Error(ErrorKind::InvalidParams, "cocycle test expects a 1-cochain");
  if (f.base().dim() < 2) return true;
  const auto d = apply_coboundary(f);
  for (Element g : d.values())
    if (g != FiniteGroup::identity()) return false;
  return true;
}

std::optional<Cochain> coboundary_witness(const Cochain& f) {
  if (f.dim() != 1) throw Error(ErrorKind::InvalidParams, "coboundary test expects a 1-cochain");
  const auto& X = f.base();
  const auto& G = f.group();
  const std::size_t n = X.count(0);
  std::vector<std::vector<std::pair<std::size_t, Vertex>>> adj(n);
  for (const auto& e : X.faces(1)) {
    const std::size_t a = X.vertex_index(e[0]);
    const std::size_t b = X.vertex_index(e[1]);
    adj[a].emplace_back(b, e[1]);
    adj[b].emplace_back(a, e[0]);
  }
  Cochain g(f.base_ptr(), f.group_ptr(), 0);
  std::vector<bool> seen(n, false);
  const auto& labels = X.vertex_labels();
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (auto [w, wl] : adj[u]) {
        if (seen[w]) continue;
        seen[w] = true;
        // f(u,w) = g(u) g(w)^{-1}  =>  g(w) = f(u,w)^{-1} g(u)
        g.set(w, G.mul(G.inv(f.value(labels[u], wl)), g.at(u)));
        q.push(w);
      }
    }
  }
  if (apply_coboundary(g) == f) return g;
  return std::nullopt;
}

std::uint64_t support_count(const Cochain& f) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.at(i) != FiniteGroup::identity()) total += f.base().weight_count(f.dim(), i);
  return total;
}

Rational cochain_norm(const Cochain& f) {
  return Rational(support_count(f), f.base().weight_denominator(f.dim()));
}

std::uint64_t disagreement_count(const Cochain& f1, const Cochain& f2) {
  if (f1.base_ptr() != f2.base_ptr() || f1.dim() != f2.dim() || !(f1.group() == f2.group()))
    throw Error(ErrorKind::BaseMismatch, "cochains live on different bases");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < f1.size(); ++i)
    if (f1.at(i) != f2.at(i)) total += f1.base().weight_count(f1.dim(), i);
  return total;
}

Rational cochain_dist(const Cochain& f1, const Cochain& f2) {
  return Rational(disagreement_count(f1, f2), f1.base().weight_denominator(f1.dim()));
}

Cochain pointwise_product(const Cochain& f1, const Cochain& f2) {
  if (f1.base_ptr() != f2.base_ptr() || f1.dim() != f2.dim())
    throw Error(ErrorKind::BaseMismatch, "cochains live on different bases");
  Cochain out = f1;
  for (std::size_t i = 0; i < f1.size(); ++i) out.set(i, f1.group().mul(f1.at(i), f2.at(i)));
  return out;
}

Cochain pointwise_inverse(const Cochain& f) {
  Cochain out = f;
  for (std::size_t i = 0; i < f.size(); ++i) out.set(i, f.group().inv(f.at(i)));
  return out;
}

}  // namespace listagree
