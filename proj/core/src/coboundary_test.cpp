#include "listagree/coboundary_test.hpp"

#include "listagree/error.hpp"

#include <algorithm>
#include <queue>

namespace listagree {

namespace {

Element triangle_product(const FiniteGroup& G, Element ab, Element bc, Element ca) { return G.mul(G.mul(ab, bc), ca); }

std::array<Vertex, 3> sorted3(Vertex a, Vertex b, Vertex c) {
  std::array<Vertex, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

const RepresentationComplex& require_lower(const RepresentationComplex& R) {
  if (!R.lower()) throw Error(ErrorKind::DimensionOutOfRange, "level 0 has no empty triangles");
  return *R.lower();
}

}  // namespace

std::vector<EmptyTriangle> empty_triangles_of_edge(const RepresentationComplex& R, Vertex u, Vertex v) {
  const Face edge = make_face({u, v});
  if (edge.size() != 2 || !R.complex().contains(edge)) throw Error(ErrorKind::NotAnEdge, "not an edge of R̂_k");
  std::vector<EmptyTriangle> out;
  if (R.k() == 0) return out;
  const auto& L = *R.lower();
  const Face U = R.vertex_face(u), V = R.vertex_face(v);
  const Face I = face_intersection(U, V);
  const Face S = face_union(face_difference(U, V), face_difference(V, U));
  for (const auto& A : subsets_of_size(I, R.k() - 1)) {
    const Face W = face_union(S, A);
    const Vertex w = R.vertex_of(W);
    out.push_back(EmptyTriangle{sorted3(u, v, w),
                                make_face({L.vertex_of(I), L.vertex_of(face_intersection(V, W)),
                                           L.vertex_of(face_intersection(W, U))})});
  }
  return out;
}

std::vector<EmptyTriangle> all_empty_triangles(const RepresentationComplex& R) {
  std::vector<EmptyTriangle> out;
  if (R.k() == 0) return out;
  const auto& L = *R.lower();
  for (const auto& t : L.complex().faces(2)) {
    const Face &a = L.vertex_face(t[0]), &b = L.vertex_face(t[1]), &c = L.vertex_face(t[2]);
    out.push_back(EmptyTriangle{
        sorted3(R.vertex_of(face_union(a, b)), R.vertex_of(face_union(b, c)), R.vertex_of(face_union(c, a))), t});
  }
  return out;
}

TriangleViolations empty_triangle_test_exact(const Cochain& f, const RepresentationComplex& R) {
  if (f.base_ptr() != R.complex_ptr() || f.dim() != 1)
    throw Error(ErrorKind::NotARepresentationComplex, "cochain is not an edge cochain on this representation complex");
  const auto& G = f.group();
  const auto& C = R.complex();
  TriangleViolations out{0, 0, 0};
  if (C.dim() >= 2) {
    std::uint64_t bad = 0;
    const auto& tris = C.faces(2);
    for (std::size_t t = 0; t < tris.size(); ++t) {
      const auto& s = tris[t];
      if (triangle_product(G, f.value(s[0], s[1]), f.value(s[1], s[2]), f.value(s[2], s[0])) != FiniteGroup::identity())
        bad += C.weight_count(2, t);
    }
    out.eps_full = Rational(bad, C.weight_denominator(2));
  }
  if (R.k() >= 1) {
    const auto& L = R.lower()->complex();
    std::uint64_t bad = 0;
    const auto tris = all_empty_triangles(R);
    for (std::size_t t = 0; t < tris.size(); ++t) {
      const auto& s = tris[t].vertices;
      if (triangle_product(G, f.value(s[0], s[1]), f.value(s[1], s[2]), f.value(s[2], s[0])) != FiniteGroup::identity())
        bad += L.weight_count(2, t);
    }
    out.eps_empty = Rational(bad, L.weight_denominator(2));
  }
  out.rejection = (out.eps_full + out.eps_empty) / 2;
  return out;
}

bool empty_triangle_test_once(const RepresentationComplex& R, const FiniteGroup& G, const EdgeOracle& oracle, Rng& rng) {
  std::array<Vertex, 3> t{};
  if (rng.coin()) {
    if (R.complex().dim() < 2) return true;
    const Face s = sample_rep_face(R, 2, rng);
    t = {s[0], s[1], s[2]};
  } else {
    if (R.k() == 0) return true;
    const auto& L = *R.lower();
    const Face s = sample_rep_face(L, 2, rng);
    const Face &a = L.vertex_face(s[0]), &b = L.vertex_face(s[1]), &c = L.vertex_face(s[2]);
    t = sorted3(R.vertex_of(face_union(a, b)), R.vertex_of(face_union(b, c)), R.vertex_of(face_union(c, a)));
  }
  return triangle_product(G, oracle(t[0], t[1]), oracle(t[1], t[2]), oracle(t[2], t[0])) == FiniteGroup::identity();
}

EkCoefficients e_k_coefficients(const Rational& gamma, int k) {
  if (gamma <= 0) throw Error(ErrorKind::NonpositiveGamma, to_string(gamma));
  if (k < 0) throw Error(ErrorKind::InvalidParams, "k must be nonnegative");
  if (k == 0) return {1 / gamma, 0};
  const Rational ratio = 6 / gamma;
  EkCoefficients c{0, 0};
  Rational power = 1;
  for (int i = 1; i <= k; ++i) {
    c.full += Rational(k + 2 - i, k + 1) * power;
    if (i <= k - 1) c.empty += Rational(k + 1 - i, k + 1) * power;
    power *= ratio;
  }
  c.full /= gamma;
  c.empty *= 2 / gamma;
  return c;
}

EkCoefficients e_k_coefficients_recurrence(const Rational& gamma, int k) {
  if (gamma <= 0) throw Error(ErrorKind::NonpositiveGamma, to_string(gamma));
  if (k < 0) throw Error(ErrorKind::InvalidParams, "k must be nonnegative");
  EkCoefficients c{1 / gamma, 0};
  for (int j = 1; j <= k; ++j) {
    const Rational scale(2 * j, j + 1);
    c = EkCoefficients{1 / gamma + scale * c.full * 3 / gamma, scale * c.full};
  }
  return c;
}

Rational e_k_bound(const Rational& eps_full, const Rational& eps_empty, const Rational& gamma, int k) {
  const auto c = e_k_coefficients(gamma, k);
  return c.full * eps_full + c.empty * eps_empty;
}

Rational e_k_bound_recurrence(const Rational& eps_full, const Rational& eps_empty, const Rational& gamma, int k) {
  const auto c = e_k_coefficients_recurrence(gamma, k);
  return c.full * eps_full + c.empty * eps_empty;
}

Rational tester_constant(const EkCoefficients& c) {
  const Rational s = c.full + c.empty;
  if (s <= 0) throw Error(ErrorKind::InvalidParams, "degenerate coefficients");
  return 1 / (2 * s);
}

AttachmentData attachment_map(const Cochain& f, const RepresentationComplex& R, Rng* rng) {
  if (f.base_ptr() != R.complex_ptr() || f.dim() != 1)
    throw Error(ErrorKind::NotARepresentationComplex, "cochain is not an edge cochain on this representation complex");
  const auto& L = require_lower(R);
  if (!is_cocycle(f)) throw Error(ErrorKind::NotACocycle, "attachment maps need a cocycle");
  const auto& G = f.group();
  const auto& C = R.complex();
  const std::size_t cores = L.complex().count(0);

  std::vector<std::vector<std::pair<Vertex, Vertex>>> core_edges(cores);
  for (const auto& e : C.faces(1)) core_edges[static_cast<std::size_t>(L.vertex_of(R.core_of(e)))].emplace_back(e[0], e[1]);

  AttachmentData out{std::vector<std::map<Vertex, Element>>(cores), Cochain(L.complex_ptr(), f.group_ptr(), 1)};
  for (std::size_t c = 0; c < cores; ++c) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (auto [a, b] : core_edges[c]) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    auto& h = out.local[c];
    for (const auto& [root, unused] : adj) {
      (void)unused;
      if (h.count(root)) continue;
      const Element offset = rng ? static_cast<Element>(rng->below(G.order())) : FiniteGroup::identity();
      h[root] = offset;
      std::queue<Vertex> q;
      q.push(root);
      while (!q.empty()) {
        const Vertex a = q.front();
        q.pop();
        for (Vertex b : adj[a]) {
          if (h.count(b)) continue;
          h[b] = G.mul(G.inv(f.value(a, b)), h[a]);
          q.push(b);
        }
      }
    }
    for (auto [a, b] : core_edges[c])
      if (f.value(a, b) != G.mul(h[a], G.inv(h[b])))
        throw Error(ErrorKind::LocalWitnessFailed, "no local witness around core " + std::to_string(c));
  }
  const auto& lower_edges = L.complex().faces(1);
  for (std::size_t e = 0; e < lower_edges.size(); ++e) {
    const Vertex a = lower_edges[e][0], b = lower_edges[e][1];
    const Vertex u = R.vertex_of(face_union(L.vertex_face(a), L.vertex_face(b)));
    out.lowered.set(e, G.mul(G.inv(out.local[a].at(u)), out.local[b].at(u)));
  }
  return out;
}

std::vector<Vertex> canonical_cores(const RepresentationComplex& R, const Cochain& psi_lower) {
  const auto& L = require_lower(R);
  if (psi_lower.base_ptr() != L.complex_ptr()) throw Error(ErrorKind::BaseMismatch, "psi must live on R̂_{k-1}");
  const auto& LC = L.complex();
  std::vector<Vertex> out(R.complex().count(0));
  for (std::size_t u = 0; u < out.size(); ++u) {
    Face candidates;
    for (const auto& c : subsets_of_size(R.vertex_face(static_cast<Vertex>(u)), R.k())) candidates.push_back(L.vertex_of(c));
    std::sort(candidates.begin(), candidates.end());
    Vertex best = candidates[0];
    std::uint64_t best_cost = UINT64_MAX;
    for (Vertex c : candidates) {
      std::uint64_t cost = 0;
      for (Vertex v : candidates) {
        if (v == c) continue;
        const Face e = make_face({c, v});
        if (psi_lower.value(c, v) != FiniteGroup::identity()) cost += LC.weight_count(1, LC.require_index(e));
      }
      if (cost < best_cost) {
        best_cost = cost;
        best = c;
      }
    }
    out[u] = best;
  }
  return out;
}

ExhaustiveRounding round_to_coboundary(const Cochain& f) {
  auto near = nearest_coboundary(f);
  return ExhaustiveRounding{std::move(near.nearest), std::move(near.distance)};
}

ConstructiveRounding round_cocycle_via_attachment(const Cochain& f, const RepresentationComplex& R) {
  const auto att = attachment_map(f, R);
  const auto& G = f.group();
  auto near = nearest_coboundary(att.lowered);
  const Cochain psi = pointwise_product(pointwise_inverse(near.nearest), att.lowered);
  const auto cores = canonical_cores(R, psi);
  Cochain g(R.complex_ptr(), f.group_ptr(), 0);
  for (std::size_t u = 0; u < cores.size(); ++u) {
    const Vertex c = cores[u];
    g.set(u, G.mul(att.local[static_cast<std::size_t>(c)].at(static_cast<Vertex>(u)), near.witness.at(static_cast<std::size_t>(c))));
  }
  Cochain rounded = apply_coboundary(g);
  const Rational psi_norm = cochain_norm(psi);
  const Rational distance = cochain_dist(f, rounded);
  const int k = R.k();
  ConstructiveRounding out{near.nearest, psi_norm, std::move(rounded), distance,
                           distance <= Rational(2 * k, k + 1) * psi_norm, std::nullopt};
  if (k >= 2) out.within_stated_constant = distance <= Rational(2 * k, k - 1) * psi_norm;
  return out;
}

}  // namespace listagree
