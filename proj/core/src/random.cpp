#include "scalefree/random.hpp"

namespace scalefree {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

// Lemire's nearly-divisionless bounded draw.
std::uint64_t Rng::below(std::uint64_t bound) {
  u128 product = static_cast<u128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace scalefree
