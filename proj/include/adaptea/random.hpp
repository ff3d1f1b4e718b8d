#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace adaptea {

// Seeded random stream owned by a single run. Draws are built directly on the
// mt19937_64 output so that sequences are identical across standard libraries.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer on [0, n). n must be positive.
  std::size_t index(std::size_t n);

  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Stable per-run seed: the master seed is mixed with an FNV-1a hash of the
// design and problem names and the run index, so streams of one cell never
// depend on which other cells exist in a campaign.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view design,
                          std::string_view problem, std::uint64_t run_index);

}  // namespace adaptea
