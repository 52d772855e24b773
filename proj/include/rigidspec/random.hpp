#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rigidspec {

/// Generator used for every seeded draw. Streams are std::mt19937_64 engines
/// keyed by std::seed_seq over (seed, stream tag); a stream's output depends
/// only on that pair, never on thread schedule.
using Rng = std::mt19937_64;

/// 64-bit FNV-1a of a tag string.
std::uint64_t stream_tag(std::string_view tag);

Rng make_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index = 0);
Rng make_stream(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

}  // namespace rigidspec
