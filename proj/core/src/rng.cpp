#include "listagree/rng.hpp"

namespace listagree {

std::uint64_t Rng::below(std::uint64_t n) {
  // Lemire-style rejection keeps draws unbiased and platform independent.
  const std::uint64_t limit = (0 - n) % n;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= limit) return x % n;
  }
}

}  // namespace listagree
