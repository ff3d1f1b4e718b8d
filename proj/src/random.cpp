#include "adaptea/random.hpp"

#include <limits>
#include <stdexcept>

namespace adaptea {

std::size_t Random::index(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("Random::index: empty range");
  }
  const std::uint64_t bound = n;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) {
    draw = engine_();
  }
  return static_cast<std::size_t>(draw % bound);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view design,
                          std::string_view problem, std::uint64_t run_index) {
  std::uint64_t state = splitmix64(master_seed);
  state = splitmix64(state ^ fnv1a(design));
  state = splitmix64(state ^ fnv1a(problem));
  return splitmix64(state ^ run_index);
}

}  // namespace adaptea
