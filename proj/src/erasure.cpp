#include "qchan/erasure.hpp"

#include <cmath>
#include <stdexcept>

namespace qchan {

Isometry perfect_iso(Index d) {
  if (d < 1) throw std::invalid_argument("perfect_iso: dimension must be positive");
  return Isometry(Matrix::Identity(d, d), d, 1);
}

Isometry perfect_swap_iso(Index d) {
  if (d < 1) throw std::invalid_argument("perfect_swap_iso: dimension must be positive");
  return Isometry(Matrix::Identity(d, d), 1, d);
}

GeneralizedErasure generalized_erasure(const Isometry& inner, double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("generalized_erasure: lambda must lie in [0, 1]");
  const Index da = inner.d_a;
  GeneralizedErasure g;
  g.inner = inner;
  g.lambda = lambda;
  g.d_b1 = inner.d_b;
  g.d_c1 = inner.d_c;

  GluedSpec spec;
  spec.d_a = da;
  spec.d_b = inner.d_b + 1;
  spec.d_c = inner.d_c + da;
  spec.parts = {inner, perfect_swap_iso(da)};
  spec.weights = {std::sqrt(1.0 - lambda), std::sqrt(lambda)};
  spec.embeddings = {
      {Matrix::Identity(da, da), injection(spec.d_b, 0, inner.d_b),
       injection(spec.d_c, 0, inner.d_c)},
      {Matrix::Identity(da, da), injection(spec.d_b, inner.d_b, 1),
       injection(spec.d_c, inner.d_c, da)}};
  g.assembled = make_pair(glue(spec));
  return g;
}

GeneralizedErasure erasure_pair(double lambda, Index d) {
  if (d < 2) throw std::invalid_argument("erasure_pair: input dimension must be >= 2");
  return generalized_erasure(perfect_iso(d), lambda);
}

ErasureQ1 erasure_q1(double lambda, Index d) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("erasure_q1: lambda must lie in [0, 1]");
  if (d < 2) throw std::invalid_argument("erasure_q1: input dimension must be >= 2");
  const double logd = std::log2(static_cast<double>(d));
  return {std::max(1.0 - 2.0 * lambda, 0.0) * logd,
          std::max(2.0 * lambda - 1.0, 0.0) * logd};
}

Superoperator flagged_erasure_degrader(double lambda, Index d) {
  if (lambda < 0.0 || lambda > 0.5)
    throw std::invalid_argument("flagged_erasure_degrader: requires lambda in [0, 1/2]");
  if (d < 2)
    throw std::invalid_argument("flagged_erasure_degrader: input dimension must be >= 2");
  const double mu = (1.0 - 2.0 * lambda) / (1.0 - lambda);
  const Index dim = d + 1;  // transmitted block then flag
  return Superoperator::from_function(dim, dim, [=](const Matrix& x) {
    Matrix out = Matrix::Zero(dim, dim);
    // output basis: erased flag first, transmitted block after it
    out.block(1, 1, d, d) = (1.0 - mu) * x.block(0, 0, d, d);
    out(0, 0) = mu * x.block(0, 0, d, d).trace() + x(d, d);
    return out;
  });
}

double incomplete_erasure_epsilon(double mu, double lambda) {
  if (mu < 0.0 || mu > 1.0 || lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("incomplete_erasure_epsilon: parameters must lie in [0, 1]");
  return (1.0 - lambda) * mu;
}

bool zero_capacity_interval(double mu, double lambda) {
  if (mu <= 0.0) return false;
  return lambda <= 1.0 - 1.0 / (2.0 * mu);
}

}  // namespace qchan
