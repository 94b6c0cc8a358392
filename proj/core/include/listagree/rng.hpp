#pragma once

#include <cstdint>
#include <random>

namespace listagree {

std::uint64_t splitmix64(std::uint64_t x);

// Seed of trial `index` under `master`; independent of scheduling.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + index);
}

// Wraps mt19937_64 with distribution code that is identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace listagree
