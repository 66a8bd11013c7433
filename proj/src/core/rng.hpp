/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <vector>

namespace gosvm {

// Seed identity for reproducible experiments: a root seed plus a stream id.
// Two Rng instances built from the same (seed, stream) pair produce identical
// draw sequences; distinct stream ids give decorrelated streams.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", OOPSLA 2014).  Counter-based: output k of a sequence seeded
// with s is mix(s + (k+1)*GAMMA).  Stream j of root seed s is the SplitMix64
// sequence whose seed is output j of the root sequence.
class Rng {
 public:
  explicit Rng(RngSeed seed);
  Rng(std::uint64_t seed, std::uint64_t stream) : Rng(RngSeed{seed, stream}) {}

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi);

  // Uniform integer on [0, n), n > 0.  Unbiased via rejection sampling.
  std::uint64_t uniform_int(std::uint64_t n);

  // Standard normal via Box-Muller.
  double gaussian();

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
  bool have_cached_gaussian_ = false;
  double cached_gaussian_ = 0.0;
};

}  // namespace gosvm
