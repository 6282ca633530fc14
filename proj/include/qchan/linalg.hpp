#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qchan {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Numeric tolerances shared across the library.
namespace tol {
inline constexpr double herm = 1e-10;      // Hermiticity residual bound
inline constexpr double sum = 1e-9;        // trace / weight-sum normalization bound
inline constexpr double eig_clip = 1e-12;  // eigenvalues in [-eig_clip, 0) clamp to 0
inline constexpr double eig = 1e-8;        // eigenvalues below -eig are a hard error
inline constexpr double iso = 1e-10;       // isometry / projector residual bound
}  // namespace tol

// Bipartite dimension split d = left * right.
struct DimSplit {
  Index left = 0;
  Index right = 0;
};

enum class Side { left, right };

// Eigenvalues of a Hermitian operator, sorted descending.
struct Spectrum {
  std::vector<double> eigenvalues;
};

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tolerance = tol::herm);

// Kronecker product with row-major index convention:
// (A (x) B)[i*rows(B)+k, j*cols(B)+l] = A(i,j) * B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

// Trace out one tensor factor of an operator on H_left (x) H_right.
Matrix partial_trace(const Matrix& m, DimSplit split, Side traced);

// Permutation matrix reordering tensor factors: factor m of the output equals
// factor perm[m] of the input.  dims lists the input factor dimensions.
Matrix factor_permutation(const std::vector<Index>& dims,
                          const std::vector<Index>& perm);

Spectrum hermitian_spectrum(const Matrix& m);

// Entropy of a density operator, in bits.
double von_neumann_entropy(const Matrix& rho);

// Entropy of a probability vector, in bits.  0 log 0 = 0.
double shannon_entropy(const std::vector<double>& probs);

double binary_entropy(double q);

// Block-diagonal direct sum of square blocks.
Matrix direct_sum_embed(const std::vector<Matrix>& blocks);

// Entropy of an eigenvalue list that is assumed pre-validated; clamps tiny
// negatives.  Internal fast path shared by the channel-evaluation loops.
double entropy_of_eigenvalues(const Eigen::VectorXd& vals);

// Throws std::invalid_argument unless rho is Hermitian, unit trace and
// positive semidefinite within tolerances.
void validate_density(const Matrix& rho);

}  // namespace qchan
