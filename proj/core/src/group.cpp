#include "listagree/group.hpp"

#include "listagree/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace listagree {

FiniteGroup FiniteGroup::symmetric(int l) {
  if (l < 1 || l > 6) throw Error(ErrorKind::InvalidParams, "symmetric group degree must be in [1,6]");
  FiniteGroup G;
  G.kind_ = Kind::Symmetric;
  G.degree_ = l;
  std::vector<int> p(l);
  std::iota(p.begin(), p.end(), 0);
  do {
    G.perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = G.perms_.size();
  std::map<std::vector<int>, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(G.perms_[i], static_cast<Element>(i));
  G.mul_.resize(n * n);
  G.inv_.resize(n);
  std::vector<int> q(l);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (int s = 0; s < l; ++s) q[s] = G.perms_[a][G.perms_[b][s]];
      G.mul_[a * n + b] = index.at(q);
    }
    for (int s = 0; s < l; ++s) q[G.perms_[a][s]] = s;
    G.inv_[a] = index.at(q);
  }
  return G;
}

FiniteGroup FiniteGroup::f2() {
  FiniteGroup G = symmetric(2);
  G.kind_ = Kind::F2;
  return G;
}

std::string FiniteGroup::name() const {
  if (kind_ == Kind::F2) return "F2";
  return "S_" + std::to_string(degree_);
}

Element FiniteGroup::element_of(const std::vector<int>& perm) const {
  auto it = std::find(perms_.begin(), perms_.end(), perm);
  if (it == perms_.end()) throw Error(ErrorKind::InvalidParams, "not a permutation of degree " + std::to_string(degree_));
  return static_cast<Element>(it - perms_.begin());
}

}  // namespace listagree
