#include "crossings/sampling.hpp"

#include "crossings/errors.hpp"

#include <algorithm>
#include <thread>

namespace crossings {

std::uint64_t Xoshiro256StarStar::bounded(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("bounded: zero bound");
  while (true) {
    const std::uint64_t x = next();
    const unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    const std::uint64_t low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0ULL - bound) % bound;
      if (low < threshold) continue;
    }
    return static_cast<std::uint64_t>(m >> 64);
  }
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 sm(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  return sm.next();
}

void fisher_yates(std::span<int> values, Xoshiro256StarStar& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.bounded(i));
    std::swap(values[i - 1], values[j]);
  }
}

Permutation random_permutation(int n, Xoshiro256StarStar& rng) {
  std::vector<int> pos(static_cast<std::size_t>(n));
  std::iota(pos.begin(), pos.end(), 1);
  fisher_yates(pos, rng);
  return Permutation(std::move(pos));
}

std::string_view generator_identity() {
  return "xoshiro256** seeded by splitmix64; Lemire bounded draws; "
         "Fisher-Yates shuffle; substreams per 4096-sample chunk";
}

namespace {

void sample_chunk(const Graph& g, std::uint64_t seed, std::int64_t chunk_index,
                  std::span<std::int64_t> out) {
  Xoshiro256StarStar rng(substream_seed(seed, static_cast<std::uint64_t>(chunk_index)));
  const int n = g.vertex_count();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (auto& slot : out) {
    std::iota(pos.begin(), pos.end(), 1);
    fisher_yates(pos, rng);
    slot = count_crossings(g, std::span<const int>(pos));
  }
}

}  // namespace

std::vector<std::int64_t> sample_crossings(const Graph& g, std::int64_t samples,
                                           std::uint64_t seed, int threads) {
  if (samples < 1) throw ValidationError("sample_crossings: samples must be positive");
  std::vector<std::int64_t> out(static_cast<std::size_t>(samples));
  const std::int64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  auto run_range = [&](std::int64_t first_chunk, std::int64_t last_chunk) {
    for (std::int64_t c = first_chunk; c < last_chunk; ++c) {
      const std::int64_t begin = c * kSampleChunk;
      const std::int64_t end = std::min(samples, begin + kSampleChunk);
      sample_chunk(g, seed, c, std::span<std::int64_t>(out).subspan(begin, end - begin));
    }
  };
  const int workers =
      static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(threads, chunks)));
  if (workers == 1) {
    run_range(0, chunks);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t per = (chunks + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::int64_t first = w * per;
      const std::int64_t last = std::min(chunks, first + per);
      if (first >= last) break;
      pool.emplace_back(run_range, first, last);
    }
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace crossings
