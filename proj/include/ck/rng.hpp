#pragma once

#include <cstdint>

namespace ck {

// splitmix64: tiny deterministic generator for property tests and samplers.
// Fixed algorithm (not stdlib) so sampled test cases are identical across
// platforms and standard library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant at test scale.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t s_;
};

}  // namespace ck
