#pragma once

#include "crossings/graph.hpp"
#include "crossings/rng.hpp"

#include <cstdint>
#include <vector>

namespace crossings {

/// Samples are produced in fixed chunks of this many draws; chunk c uses the
/// substream substream_seed(seed, c). The output is the concatenation in
/// chunk order, independent of worker count, and a prefix of a longer run
/// with the same seed.
inline constexpr std::int64_t kSampleChunk = 4096;

/// i.i.d. crossing counts of g under uniform random embeddings.
std::vector<std::int64_t> sample_crossings(const Graph& g, std::int64_t samples,
                                           std::uint64_t seed, int threads = 1);

}  // namespace crossings
