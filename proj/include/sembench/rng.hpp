#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace sembench {

// SplitMix64 (Steele, Lea & Flood, 2014). The output sequence is fixed by
// the algorithm rather than by a standard-library implementation, so a seed
// reproduces the same artifacts on every platform and in every language
// that implements the same mixer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Draw from [0, n) by the multiply-shift reduction (Lemire, 2019).
  // Bias is below n / 2^64, which is irrelevant at our scales, and the
  // mapping is exactly reproducible.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return (next() & 1) != 0; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// FNV-1a over a label, used to fork independent deterministic streams from
// one master seed.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Child stream: mixes the label hash into the master seed through one
// SplitMix64 step so that sibling streams are decorrelated.
inline SplitMix64 fork_rng(std::uint64_t master_seed, std::string_view label) {
  SplitMix64 mixer(master_seed ^ fnv1a64(label));
  return SplitMix64(mixer.next());
}

// Fisher-Yates with our own generator; std::shuffle is implementation
// defined and would break cross-platform determinism.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = rng.index(i);
    using std::swap;
    swap(v[i - 1], v[j]);
  }
}

// k distinct indices from [0, n), in ascending order.
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k,
                                               SplitMix64& rng) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k && i < n; ++i) {
    std::size_t j = i + rng.index(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k < n ? k : n);
  std::sort(pool.begin(), pool.end());
  return pool;
}

template <typename T>
const T& pick(const std::vector<T>& v, SplitMix64& rng) {
  return v[rng.index(v.size())];
}

}  // namespace sembench
