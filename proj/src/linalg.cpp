#include "qchan/linalg.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qchan {

namespace {
constexpr double kLog2 = 0.69314718055994530942;
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tolerance;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& m, DimSplit split, Side traced) {
  const Index dl = split.left, dr = split.right;
  if (dl <= 0 || dr <= 0 || m.rows() != m.cols() || m.rows() != dl * dr)
    throw std::invalid_argument("partial_trace: dimension split does not match operator");
  if (traced == Side::right) {
    Matrix out = Matrix::Zero(dl, dl);
    for (Index i = 0; i < dl; ++i)
      for (Index j = 0; j < dl; ++j)
        for (Index r = 0; r < dr; ++r) out(i, j) += m(i * dr + r, j * dr + r);
    return out;
  }
  Matrix out = Matrix::Zero(dr, dr);
  for (Index r = 0; r < dr; ++r)
    for (Index s = 0; s < dr; ++s)
      for (Index i = 0; i < dl; ++i) out(r, s) += m(i * dr + r, i * dr + s);
  return out;
}

Matrix factor_permutation(const std::vector<Index>& dims,
                          const std::vector<Index>& perm) {
  const size_t n = dims.size();
  if (perm.size() != n)
    throw std::invalid_argument("factor_permutation: dims/perm size mismatch");
  Index total = 1;
  for (Index d : dims) total *= d;
  std::vector<Index> stride(n, 1);  // input strides, row-major
  for (size_t k = n; k-- > 1;) stride[k - 1] = stride[k] * dims[k];
  Matrix p = Matrix::Zero(total, total);
  std::vector<Index> digit(n, 0);
  for (Index col = 0; col < total; ++col) {
    Index rem = col;
    for (size_t k = 0; k < n; ++k) {
      digit[k] = rem / stride[k];
      rem %= stride[k];
    }
    Index row = 0;
    for (size_t m = 0; m < n; ++m) row = row * dims[perm[m]] + digit[perm[m]];
    p(row, col) = 1.0;
  }
  return p;
}

Spectrum hermitian_spectrum(const Matrix& m) {
  if (!is_hermitian(m))
    throw std::invalid_argument("hermitian_spectrum: operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  Eigen::VectorXd vals = solver.eigenvalues();
  Spectrum s;
  s.eigenvalues.assign(vals.data(), vals.data() + vals.size());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<double>());
  return s;
}

double entropy_of_eigenvalues(const Eigen::VectorXd& vals) {
  double h = 0.0;
  for (Index i = 0; i < vals.size(); ++i) {
    double v = vals[i];
    if (v <= tol::eig_clip) continue;  // clamp roundoff negatives and zeros
    h -= v * std::log(v);
  }
  return h / kLog2;
}

double von_neumann_entropy(const Matrix& rho) {
  validate_density(rho);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  return entropy_of_eigenvalues(solver.eigenvalues());
}

double shannon_entropy(const std::vector<double>& probs) {
  double total = 0.0;
  for (double p : probs) {
    if (p < -tol::eig_clip)
      throw std::invalid_argument("shannon_entropy: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > tol::sum)
    throw std::invalid_argument("shannon_entropy: probabilities do not sum to 1");
  double h = 0.0;
  for (double p : probs)
    if (p > tol::eig_clip) h -= p * std::log(p);
  return h / kLog2;
}

double binary_entropy(double q) {
  double h = 0.0;
  if (q > 0.0) h -= q * std::log(q);
  if (q < 1.0) h -= (1.0 - q) * std::log1p(-q);
  return h / kLog2;
}

Matrix direct_sum_embed(const std::vector<Matrix>& blocks) {
  Index total = 0;
  for (const Matrix& b : blocks) {
    if (b.rows() != b.cols())
      throw std::invalid_argument("direct_sum_embed: blocks must be square");
    total += b.rows();
  }
  Matrix out = Matrix::Zero(total, total);
  Index at = 0;
  for (const Matrix& b : blocks) {
    out.block(at, at, b.rows(), b.rows()) = b;
    at += b.rows();
  }
  return out;
}

void validate_density(const Matrix& rho) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("density operator must be square");
  if (!is_hermitian(rho))
    throw std::invalid_argument("density operator is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol::sum ||
      std::abs(rho.trace().imag()) > tol::sum)
    throw std::invalid_argument("density operator trace deviates from 1");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol::eig)
    throw std::invalid_argument("density operator has a negative eigenvalue");
}

}  // namespace qchan
