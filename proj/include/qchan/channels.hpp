#pragma once

#include <functional>
#include <vector>

#include "qchan/linalg.hpp"

namespace qchan {

// Isometry J: H_a -> H_b (x) H_c with J^dag J = I.  Output rows are indexed
// ib * d_c + ic (b is the left tensor factor).
struct Isometry {
  Matrix j;
  Index d_a = 0, d_b = 0, d_c = 0;

  Isometry() = default;
  Isometry(Matrix m, Index db, Index dc);  // validates the isometry condition
};

// Linear map on operators stored as its action matrix in the matrix-unit
// basis: column i*dim_in+j holds vec of the image of |i><j|, with vec taken
// row-major.
struct Superoperator {
  Index dim_in = 0, dim_out = 0;
  Matrix action;

  Matrix apply(const Matrix& a) const;
  static Superoperator identity(Index dim);
  static Superoperator from_function(Index dim_in, Index dim_out,
                                     const std::function<Matrix(const Matrix&)>& f);
  // this after other
  Superoperator compose(const Superoperator& other) const;
  // Superoperator of X -> Tr_side(X) on H_left (x) H_right.
  static Superoperator partial_trace_map(DimSplit split, Side traced);
};

// Projective decomposition of the identity: mutually orthogonal Hermitian
// projectors summing to I.
struct Pdi {
  std::vector<Matrix> projectors;

  Index dim() const { return projectors.empty() ? 0 : projectors.front().rows(); }
  void validate(double tolerance = tol::iso) const;
  // PDI of consecutive diagonal blocks with the given dimensions.
  static Pdi blocks(const std::vector<Index>& dims);
};

// Injection matrix (ambient x block) placing a block at the given offset of
// the ambient space, basis vectors kept in order.
Matrix injection(Index ambient, Index offset, Index block);

// Complementary channel pair B(A) = Tr_c(J A J^dag), C(A) = Tr_b(J A J^dag).
struct ChannelPair {
  Isometry iso;
  Superoperator b_op, c_op;

  Matrix apply_b(const Matrix& a) const;
  Matrix apply_c(const Matrix& a) const;
};

ChannelPair make_pair(const Isometry& iso);

// Isometry with the two output factors interchanged, so make_pair yields the
// swapped pair (C, B).
Isometry swap_outputs(const Isometry& iso);

// S(B(rho)) - S(C(rho)) in bits.
double entropy_bias(const ChannelPair& pair, const Matrix& rho);

// Pair of the composite channel B2 o B1 via J = (J2 (x) I_c1) J1, with the
// complement output ordered H_c1 (x) H_c2.
ChannelPair concatenate(const ChannelPair& p1, const ChannelPair& p2);

enum class DegradeDirection { b_to_c, c_to_b };

// Max operator-norm residual over the matrix-unit probe basis of
// target(E) - D(source(E)).
double verify_degrading(const ChannelPair& pair, const Superoperator& d,
                        DegradeDirection direction);

enum class AntidegradablePart { first, second };

// Degrading map for the complement of a composite pair when one component is
// antidegradable: given inner with inner o C_i = B_i, returns D acting on
// H_c1 (x) H_c2 with D o C = B of the concatenated pair.
Superoperator build_composite_degrader(const Superoperator& inner,
                                        AntidegradablePart which,
                                        const ChannelPair& p1,
                                        const ChannelPair& p2);

}  // namespace qchan
