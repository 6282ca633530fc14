#pragma once

#include <random>

#include "qchan/channels.hpp"

namespace qchan {

// Deterministic generators for randomized structural checks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  Matrix ginibre(Index rows, Index cols);      // iid complex normals
  Matrix hermitian(Index d);
  Matrix density(Index d);                     // Ginibre M M^dag normalized
  Matrix unitary(Index d);                     // Haar via QR phase fix
  Isometry isometry(Index d_a, Index d_b, Index d_c);
  Pdi pdi(const std::vector<Index>& block_dims);  // random-basis projectors

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace qchan
