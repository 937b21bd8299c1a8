#pragma once

#include <cstdint>

namespace slowmode {

/**
 * Counter-based random stream.
 *
 * The n-th draw is a bijective hash of (key, n), so a stream is fully
 * determined by (master seed, stream index) and can be re-created anywhere:
 * Monte Carlo results do not depend on thread count or work scheduling.
 * Stream index = realization index in all samplers.
 */
class CounterRng {
 public:
  CounterRng(std::uint64_t master_seed, std::uint64_t stream)
      : key_(mix(mix(master_seed) ^ (0x9e3779b97f4a7c15ull * (stream + 1)))) {}

  std::uint64_t next_u64() { return mix(key_ + (++ctr_) * 0x9e3779b97f4a7c15ull); }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bit() { return (next_u64() >> 63) != 0; }

  // uniform in {0, ..., n-1}; multiply-shift, bias O(n/2^64)
  std::uint32_t next_below(std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace slowmode
