#include "listagree/representation.hpp"

#include "listagree/error.hpp"

#include <algorithm>
#include <set>

namespace listagree {

std::shared_ptr<const RepresentationComplex> RepresentationComplex::build(ComplexPtr base, int k) {
  if (k < 0 || k >= base->dim())
    throw Error(ErrorKind::DimensionOutOfRange, "representation level " + std::to_string(k) +
                                                    " needs 0 <= k < " + std::to_string(base->dim()));
  auto R = std::make_shared<RepresentationComplex>();
  R->k_ = k;
  R->base_ = base;
  std::vector<Face> tops;
  for (const auto& top : base->maximal_faces()) {
    for (const auto& c : subsets_of_size(top, k)) tops.push_back(R->rep_for_core(c, top));
  }
  R->complex_ = std::make_shared<const SimplicialComplex>(SimplicialComplex::build(std::move(tops)));
  if (k >= 1) R->lower_ = build(base, k - 1);
  return R;
}

Face RepresentationComplex::represent(const Face& rface) const {
  Face out;
  for (Vertex r : rface) out = face_union(out, vertex_face(r));
  return out;
}

Face RepresentationComplex::core_of(const Face& rface) const {
  if (rface.size() < 2) throw Error(ErrorKind::InvalidParams, "cores exist from dimension 1 up");
  const Face core = face_intersection(vertex_face(rface[0]), vertex_face(rface[1]));
  for (std::size_t a = 0; a < rface.size(); ++a)
    for (std::size_t b = a + 1; b < rface.size(); ++b)
      if (face_intersection(vertex_face(rface[a]), vertex_face(rface[b])) != core)
        throw Error(ErrorKind::NotARepresentationComplex, "face without a common core");
  return core;
}

Face RepresentationComplex::rep_for_core(const Face& core, const Face& s) const {
  if (static_cast<int>(core.size()) != k_ || !is_subface(core, s) || s.size() <= core.size())
    throw Error(ErrorKind::CoreNotInFace, "core must be a k-subset of the face");
  Face out;
  for (Vertex x : face_difference(s, core)) {
    Face u = core;
    u.insert(std::upper_bound(u.begin(), u.end(), x), x);
    out.push_back(vertex_of(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> RepresentationComplex::preimages(const Face& s) const {
  base_->require_index(s);
  if (face_dim(s) < k_) return {};
  if (face_dim(s) == k_) return {Face{vertex_of(s)}};
  std::vector<Face> out;
  for (const auto& c : subsets_of_size(s, k_)) out.push_back(rep_for_core(c, s));
  return out;
}

std::vector<std::vector<Face>> representation_faces_by_definition(const SimplicialComplex& X, int k) {
  std::vector<std::vector<Face>> out;
  const auto& kfaces = X.faces(k);
  std::vector<Face> verts;
  for (std::size_t i = 0; i < kfaces.size(); ++i) verts.push_back(Face{static_cast<Vertex>(i)});
  out.push_back(verts);
  for (int i = 1; k + i <= X.dim(); ++i) {
    std::set<Face> found;
    for (const auto& s : X.faces(k + i)) {
      Face ids;
      for (const auto& u : subsets_of_size(s, k + 1)) ids.push_back(static_cast<Vertex>(X.require_index(u)));
      std::sort(ids.begin(), ids.end());
      for (const auto& t : subsets_of_size(ids, i + 1)) {
        Face uni, inter = kfaces[t[0]];
        for (Vertex r : t) {
          uni = face_union(uni, kfaces[r]);
          inter = face_intersection(inter, kfaces[r]);
        }
        if (uni == s && static_cast<int>(inter.size()) == k) found.insert(t);
      }
    }
    out.emplace_back(found.begin(), found.end());
  }
  return out;
}

Face sample_rep_face(const RepresentationComplex& R, int i, Rng& rng) {
  const int k = R.k();
  if (i < 0 || k + i > R.base().dim()) throw Error(ErrorKind::DimensionOutOfRange, "sample dimension");
  Face s = sample_face(R.base(), k + i, rng);
  if (i == 0) return Face{R.vertex_of(s)};
  const auto cores = subsets_of_size(s, k);
  return R.rep_for_core(cores[rng.below(cores.size())], s);
}

std::vector<std::pair<Face, Rational>> rep_face_distribution(const RepresentationComplex& R, int i) {
  const int k = R.k();
  if (i < 0 || k + i > R.base().dim()) throw Error(ErrorKind::DimensionOutOfRange, "sample dimension");
  std::vector<std::pair<Face, Rational>> out;
  for (auto& [s, p] : face_distribution(R.base(), k + i)) {
    if (i == 0) {
      out.emplace_back(Face{R.vertex_of(s)}, p);
      continue;
    }
    const auto cores = subsets_of_size(s, k);
    const Rational each = p / static_cast<long>(cores.size());
    for (const auto& c : cores) out.emplace_back(R.rep_for_core(c, s), each);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

CoreLinkIsomorphism core_link_isomorphism(const RepresentationComplex& R, const Face& core) {
  if (static_cast<int>(core.size()) != R.k()) throw Error(ErrorKind::CoreNotInFace, "core size must equal k");
  R.base().require_index(core);
  CoreLinkIsomorphism iso{core, {}, {}};
  const SimplicialComplex L = core.empty() ? R.base() : link(R.base(), core);
  for (int i = 0; i <= L.dim(); ++i) {
    for (const auto& s : L.faces(i)) {
      const Face up = face_union(s, core);
      const Face t = R.rep_for_core(core, up);
      iso.from_link.emplace(s, t);
      iso.to_link.emplace(t, face_difference(R.represent(t), core));
    }
  }
  return iso;
}

Cochain restrict_around_core(const Cochain& f, const RepresentationComplex& R, const Face& core) {
  if (f.base_ptr() != R.complex_ptr() || f.dim() != 1)
    throw Error(ErrorKind::NotARepresentationComplex, "cochain is not an edge cochain on this representation complex");
  Cochain out(f.base_ptr(), f.group_ptr(), 1);
  const auto& edges = R.complex().faces(1);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (R.core_of(edges[e]) == core) out.set(e, f.at(e));
  return out;
}

}  // namespace listagree
