#pragma once

// Seeded randomness with fully pinned behavior: mt19937_64 is specified by
// the standard, and the Gaussian transform is implemented here (Box-Muller)
// rather than via std::normal_distribution, whose output is
// implementation-defined. Identical seeds give identical streams on every
// platform.

#include <cstdint>
#include <random>

#include "curvature2k/tensor_space.hpp"

namespace c2k {

// splitmix64 mix of (seed, index); used to derive independent per-sample
// seeds from a campaign seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();   // [0, 1)
  double gaussian();  // standard normal

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Haar-distributed orthogonal n x n matrix (QR of a Gaussian matrix with
// the sign fix that makes the distribution uniform).
Matrix haar_orthogonal(int n, Rng& rng);

// First k columns of a Haar orthogonal matrix (orthonormal k-frame).
Matrix haar_frame(int n, int k, Rng& rng);

}  // namespace c2k
