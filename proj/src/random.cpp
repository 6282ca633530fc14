#include "qchan/random.hpp"

#include <Eigen/QR>
#include <stdexcept>

namespace qchan {

double RandomSource::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Matrix RandomSource::ginibre(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(gauss_(rng_), gauss_(rng_));
  return m;
}

Matrix RandomSource::hermitian(Index d) {
  Matrix g = ginibre(d, d);
  return 0.5 * (g + g.adjoint());
}

Matrix RandomSource::density(Index d) {
  Matrix g = ginibre(d, d);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Matrix RandomSource::unitary(Index d) {
  Eigen::HouseholderQR<Matrix> qr(ginibre(d, d));
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < d; ++k) {  // fix phases so the distribution is Haar
    Complex diag = r(k, k);
    double mag = std::abs(diag);
    q.col(k) *= mag > 0 ? diag / mag : Complex(1.0, 0.0);
  }
  return q;
}

Isometry RandomSource::isometry(Index d_a, Index d_b, Index d_c) {
  if (d_a > d_b * d_c)
    throw std::invalid_argument("RandomSource::isometry: input too large");
  Matrix u = unitary(d_b * d_c);
  return Isometry(u.leftCols(d_a), d_b, d_c);
}

Pdi RandomSource::pdi(const std::vector<Index>& block_dims) {
  Index total = 0;
  for (Index d : block_dims) total += d;
  Matrix u = unitary(total);
  Pdi out;
  Index at = 0;
  for (Index d : block_dims) {
    Matrix cols = u.middleCols(at, d);
    out.projectors.push_back(cols * cols.adjoint());
    at += d;
  }
  return out;
}

}  // namespace qchan
