#pragma once

#include <cstdint>
#include <string>

namespace erap {

// splitmix64 step (Vigna). Used both as a seed expander and as the fixed
// 64-bit mix for stream keys, so that stream derivation is identical on
// every platform.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t value) {
  std::uint64_t s = seed ^ (value + 0x9e3779b97f4a7c15ULL);
  return splitmix64(s);
}

// xoshiro256** (Blackman & Vigna), seeded through splitmix64.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed) {
    for (auto& word : s_) word = splitmix64(seed);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

inline constexpr const char* kGeneratorName = "xoshiro256** (splitmix64 stream keys)";

// A stream is addressed by (master seed, manifold, ensemble, N, instance,
// role). Distinct keys give independent streams; the same key always
// reproduces the same point sequence.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::uint64_t manifold_id = 0;
  std::uint32_t ensemble = 0;
  std::uint64_t n = 0;
  std::uint64_t instance = 0;
  std::uint32_t role = 0;  // 0 = red, 1 = blue
};

inline std::uint64_t derive_stream_seed(const StreamKey& key) {
  std::uint64_t s = key.master_seed;
  s = mix64(s, key.manifold_id);
  s = mix64(s, key.ensemble);
  s = mix64(s, key.n);
  s = mix64(s, key.instance);
  s = mix64(s, key.role);
  return s;
}

inline Xoshiro256ss make_rng(const StreamKey& key) {
  return Xoshiro256ss(derive_stream_seed(key));
}

inline std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace erap
