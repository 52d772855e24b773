#include "rigidspec/random.hpp"

namespace rigidspec {

std::uint64_t stream_tag(std::string_view tag) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Rng make_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x & 0xffffffffu); };
  auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(tag), hi(tag), lo(index), hi(index)};
  return Rng(seq);
}

Rng make_stream(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  return make_stream(seed, stream_tag(tag), index);
}

}  // namespace rigidspec
