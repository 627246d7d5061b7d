#pragma once

#include <cstdint>
#include <random>

namespace algver {

// Seeded generator shared by all sampling code. Never touches the wall clock;
// identical seeds give identical sampling sequences.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
    return d(gen_);
  }

  // uniform in [lo, hi] inclusive
  long long range(long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return d(gen_);
  }

  Rng fork() { return Rng(next() ^ 0x9e3779b97f4a7c15ull); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace algver
