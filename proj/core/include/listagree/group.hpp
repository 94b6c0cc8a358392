#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace listagree {

using Element = std::uint16_t;

// Permutation groups acting on sheets {0..l-1}. S_l elements are indexed in
// lexicographic order of their one-line arrays, so index 0 is the identity and
// index order is lexicographic order. F2 is S_2 with element 1 the swap.
class FiniteGroup {
 public:
  enum class Kind { Symmetric, F2 };

  static FiniteGroup symmetric(int l);
  static FiniteGroup f2();

  Kind kind() const { return kind_; }
  int degree() const { return degree_; }
  std::size_t order() const { return perms_.size(); }
  std::string name() const;

  static constexpr Element identity() { return 0; }
  // (a*b)(s) = a(b(s)).
  Element mul(Element a, Element b) const { return mul_[a * order() + b]; }
  Element inv(Element a) const { return inv_[a]; }
  int apply(Element g, int sheet) const { return perms_[g][sheet]; }
  const std::vector<int>& permutation(Element g) const { return perms_[g]; }
  // Throws InvalidParams when `perm` is not a permutation of the right degree.
  Element element_of(const std::vector<int>& perm) const;

  bool operator==(const FiniteGroup& o) const { return kind_ == o.kind_ && degree_ == o.degree_; }

 private:
  Kind kind_ = Kind::Symmetric;
  int degree_ = 1;
  std::vector<std::vector<int>> perms_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
};

}  // namespace listagree
