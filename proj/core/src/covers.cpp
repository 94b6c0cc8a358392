#include "listagree/covers.hpp"

#include "listagree/error.hpp"

#include <algorithm>
#include <map>

namespace listagree {

NearCover::NearCover(Cochain phi) : phi_(std::move(phi)), l_(phi_.group().degree()) {
  if (phi_.dim() != 1) throw Error(ErrorKind::InvalidParams, "near covers come from 1-cochains");
  const auto& X = phi_.base();
  faces_.resize(static_cast<std::size_t>(X.dim()) + 1);
  for (int i = 0; i <= X.dim(); ++i) {
    for (const auto& s : X.faces(i)) {
      for (auto& f : lifts(s)) {
        face_set_.insert(f);
        faces_[static_cast<std::size_t>(i)].push_back(std::move(f));
      }
    }
    std::sort(faces_[static_cast<std::size_t>(i)].begin(), faces_[static_cast<std::size_t>(i)].end());
  }
}

Vertex NearCover::cover_vertex(Vertex base_vertex, int sheet) const {
  return static_cast<Vertex>(base().vertex_index(base_vertex)) * l_ + sheet;
}

std::pair<Vertex, int> NearCover::project(Vertex cv) const {
  return {base().vertex_labels()[static_cast<std::size_t>(cv / l_)], cv % l_};
}

Face NearCover::project_face(const Face& cover_face) const {
  std::vector<Vertex> out;
  for (Vertex cv : cover_face) out.push_back(project(cv).first);
  return make_face(out);
}

bool NearCover::has_face(const Face& f) const { return f.empty() || face_set_.count(f) > 0; }

std::vector<Face> NearCover::lifts(const Face& s) const {
  const auto& G = phi_.group();
  std::vector<Face> out;
  if (s.empty()) return out;
  for (int s0 = 0; s0 < l_; ++s0) {
    std::vector<int> sheet(s.size());
    sheet[0] = s0;
    for (std::size_t j = 1; j < s.size(); ++j) sheet[j] = G.apply(phi_.value(s[j], s[0]), s0);
    bool ok = true;
    for (std::size_t a = 0; a < s.size() && ok; ++a)
      for (std::size_t b = a + 1; b < s.size() && ok; ++b)
        ok = sheet[a] == G.apply(phi_.value(s[a], s[b]), sheet[b]);
    if (!ok) continue;
    Face f;
    for (std::size_t j = 0; j < s.size(); ++j) f.push_back(cover_vertex(s[j], sheet[j]));
    out.push_back(make_face(f));
  }
  return out;
}

NearCover near_cover_from_cochain(const Cochain& phi) { return NearCover(phi); }

bool is_genuine_cover(const NearCover& Y) {
  const auto& X = Y.base();
  const int l = Y.sheets();
  // Every nonempty base face has exactly l preimages.
  std::map<Face, int> preimages;
  for (const auto& level : Y.faces())
    for (const auto& f : level) {
      const Face p = Y.project_face(f);
      if (p.size() != f.size()) return false;
      ++preimages[p];
    }
  for (int i = 0; i <= X.dim(); ++i)
    for (const auto& s : X.faces(i)) {
      auto it = preimages.find(s);
      if (it == preimages.end() || it->second != l) return false;
    }
  // Up-set of each Y face maps bijectively onto the up-set of its projection.
  for (const auto& level : Y.faces()) {
    for (const auto& f : level) {
      const Face p = Y.project_face(f);
      std::set<Face> images;
      std::size_t up_count = 0;
      for (const auto& upper : Y.faces())
        for (const auto& g : upper)
          if (g.size() > f.size() && is_subface(f, g)) {
            ++up_count;
            images.insert(Y.project_face(g));
          }
      std::size_t base_up = 0;
      for (int i = face_dim(p) + 1; i <= X.dim(); ++i)
        for (const auto& s : X.faces(i))
          if (is_subface(p, s)) {
            ++base_up;
            if (!images.count(s)) return false;
          }
      if (images.size() != up_count || up_count != base_up) return false;
    }
  }
  return true;
}

std::vector<std::pair<Vertex, int>> lift_path(const NearCover& Y, const std::vector<Vertex>& path, int start_sheet) {
  if (!is_genuine_cover(Y)) throw Error(ErrorKind::NotGenuine, "lifting needs a genuine cover");
  std::vector<std::pair<Vertex, int>> out;
  if (path.empty()) return out;
  const auto& G = Y.cochain().group();
  out.emplace_back(path[0], start_sheet);
  for (std::size_t t = 0; t + 1 < path.size(); ++t) {
    if (!Y.base().contains(make_face({path[t], path[t + 1]})) || path[t] == path[t + 1])
      throw Error(ErrorKind::NotAnEdge, "walk leaves the 1-skeleton");
    out.emplace_back(path[t + 1], G.apply(Y.cochain().value(path[t + 1], path[t]), out.back().second));
  }
  return out;
}

CoverDecomposition decompose_cover(const NearCover& Y, const Cochain& g) {
  if (g.dim() != 0 || g.base_ptr() != Y.cochain().base_ptr() || !(apply_coboundary(g) == Y.cochain()))
    throw Error(ErrorKind::NotACoboundary, "witness does not generate the cover cochain");
  const auto& X = Y.base();
  const auto& G = g.group();
  const int l = Y.sheets();
  CoverDecomposition D;
  for (int j = 0; j < l; ++j) {
    std::vector<int> sheet(X.count(0));
    for (std::size_t v = 0; v < sheet.size(); ++v) sheet[v] = G.apply(g.at(v), j);
    std::vector<std::vector<Face>> copy(static_cast<std::size_t>(X.dim()) + 1);
    for (int i = 0; i <= X.dim(); ++i)
      for (const auto& s : X.faces(i)) {
        Face f;
        for (Vertex v : s) f.push_back(static_cast<Vertex>(X.vertex_index(v)) * l + sheet[X.vertex_index(v)]);
        copy[static_cast<std::size_t>(i)].push_back(make_face(f));
      }
    D.copies.push_back(std::move(copy));
    D.sheet_of.push_back(std::move(sheet));
  }
  return D;
}

bool verify_decomposition(const NearCover& Y, const CoverDecomposition& D) {
  const auto& X = Y.base();
  if (static_cast<int>(D.copies.size()) != Y.sheets()) return false;
  std::set<Face> seen;
  std::size_t total = 0;
  for (const auto& copy : D.copies) {
    if (copy.size() != static_cast<std::size_t>(X.dim() + 1)) return false;
    std::set<Face> members;
    for (const auto& level : copy) members.insert(level.begin(), level.end());
    for (int i = 0; i <= X.dim(); ++i) {
      const auto& faces = copy[static_cast<std::size_t>(i)];
      if (faces.size() != X.count(i)) return false;
      std::set<Face> images;
      for (const auto& f : faces) {
        if (!Y.has_face(f)) return false;
        if (!seen.insert(f).second) return false;  // copies must be disjoint
        const Face p = Y.project_face(f);
        if (p.size() != f.size()) return false;
        images.insert(p);
        // Each copy is a subcomplex.
        if (f.size() > 1)
          for (const Face& sub : subsets_of_size(f, static_cast<int>(f.size()) - 1))
            if (!members.count(sub)) return false;
      }
      // Projection is a bijection onto X(i).
      if (images.size() != X.count(i)) return false;
      total += faces.size();
    }
  }
  std::size_t cover_total = 0;
  for (const auto& level : Y.faces()) cover_total += level.size();
  return total == cover_total;
}

}  // namespace listagree
