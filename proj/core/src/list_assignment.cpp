#include "listagree/list_assignment.hpp"

#include "listagree/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace listagree {

LocalFunction restrict_global(const SimplicialComplex& X, GlobalFunction f, const Face& face) {
  LocalFunction out = 0;
  for (std::size_t j = 0; j < face.size(); ++j)
    if ((f >> X.vertex_index(face[j])) & 1u) out |= 1u << j;
  return out;
}

LocalFunction restrict_local(LocalFunction value, const Face& face, const Face& sub) {
  LocalFunction out = 0;
  std::size_t pos = 0;
  for (std::size_t j = 0; j < sub.size(); ++j) {
    while (pos < face.size() && face[pos] < sub[j]) ++pos;
    if (pos == face.size() || face[pos] != sub[j]) throw Error(ErrorKind::InvalidParams, "restriction to a non-subface");
    if ((value >> pos) & 1u) out |= 1u << j;
  }
  return out;
}

Assignment::Assignment(std::shared_ptr<const SimplicialComplex> base, int k)
    : base_(std::move(base)), k_(k), values_(base_->count(k), 0) {}

Assignment assignment_from_global(std::shared_ptr<const SimplicialComplex> base, int k, GlobalFunction f) {
  Assignment a(base, k);
  for (std::size_t i = 0; i < a.face_count(); ++i) a.set(i, restrict_global(*base, f, base->faces(k)[i]));
  return a;
}

LAssignment::LAssignment(std::shared_ptr<const SimplicialComplex> base, int k, int l)
    : base_(std::move(base)), k_(k), l_(l) {
  if (l < 1) throw Error(ErrorKind::InvalidParams, "list length must be positive");
  if (k < 0 || k > base_->dim()) throw Error(ErrorKind::DimensionOutOfRange, "assignment level");
  if (k + 1 > 32) throw Error(ErrorKind::InvalidParams, "faces wider than 32 vertices");
  values_.assign(base_->count(k) * static_cast<std::size_t>(l), 0);
}

std::vector<LocalFunction> LAssignment::list(std::size_t face) const {
  const auto begin = values_.begin() + static_cast<long>(face * static_cast<std::size_t>(l_));
  return std::vector<LocalFunction>(begin, begin + l_);
}

Assignment LAssignment::slice(int slot) const {
  Assignment a(base_, k_);
  for (std::size_t i = 0; i < face_count(); ++i) a.set(i, entry(i, slot));
  return a;
}

bool is_two_locally_differing(const LAssignment& F) {
  for (std::size_t s = 0; s < F.face_count(); ++s)
    for (int i = 0; i < F.l(); ++i)
      for (int j = i + 1; j < F.l(); ++j)
        if (std::popcount(F.entry(s, i) ^ F.entry(s, j)) < 2) return false;
  return true;
}

Rational l_assignment_distance(const LAssignment& F, const LAssignment& G) {
  if (F.base_ptr() != G.base_ptr() || F.k() != G.k() || F.l() != G.l())
    throw Error(ErrorKind::BaseMismatch, "l-assignments differ in base, level or length");
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < F.face_count(); ++s) {
    std::uint64_t diff = 0;
    for (int i = 0; i < F.l(); ++i) diff += F.entry(s, i) != G.entry(s, i);
    total += diff * F.base().weight_count(F.k(), s);
  }
  return Rational(total, F.base().weight_denominator(F.k()) * static_cast<std::uint64_t>(F.l()));
}

Rational assignment_distance(const Assignment& F, const Assignment& G) {
  if (F.base_ptr() != G.base_ptr() || F.k() != G.k()) throw Error(ErrorKind::BaseMismatch, "assignments differ in base or level");
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < F.face_count(); ++s)
    if (F.at(s) != G.at(s)) total += F.base().weight_count(F.k(), s);
  return Rational(total, F.base().weight_denominator(F.k()));
}

LAssignment agreeing_l_assignment(std::shared_ptr<const SimplicialComplex> base, int k,
                                  const std::vector<GlobalFunction>& globals,
                                  const std::vector<std::vector<int>>& perms) {
  const int l = static_cast<int>(globals.size());
  LAssignment F(base, k, l);
  if (perms.size() != F.face_count()) throw Error(ErrorKind::InvalidParams, "one permutation per face");
  for (std::size_t s = 0; s < F.face_count(); ++s)
    for (int i = 0; i < l; ++i) F.set_entry(s, perms[s][static_cast<std::size_t>(i)], restrict_global(*base, globals[static_cast<std::size_t>(i)], F.face(s)));
  return F;
}

LAssignment random_agreeing_l_assignment(std::shared_ptr<const SimplicialComplex> base, int k, int l, Rng& rng,
                                         bool two_locally_differing, std::vector<GlobalFunction>* globals_out) {
  const std::size_t n = base->count(0);
  if (n > 64) throw Error(ErrorKind::InvalidParams, "more than 64 vertices");
  const GlobalFunction full = n == 64 ? ~0ULL : (1ULL << n) - 1;
  std::vector<std::vector<int>> perms(base->count(k));
  for (auto& p : perms) {
    p.resize(static_cast<std::size_t>(l));
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t a = p.size(); a > 1; --a) std::swap(p[a - 1], p[rng.below(a)]);
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<GlobalFunction> globals(static_cast<std::size_t>(l));
    for (auto& g : globals) g = rng.next() & full;
    LAssignment F = agreeing_l_assignment(base, k, globals, perms);
    if (!two_locally_differing || is_two_locally_differing(F)) {
      if (globals_out) *globals_out = globals;
      return F;
    }
  }
  throw Error(ErrorKind::PreconditionUnsatisfiable, "no 2-locally-differing globals found");
}

}  // namespace listagree
