#include "qchan/channels.hpp"

#include <Eigen/SVD>
#include <stdexcept>

namespace qchan {

namespace {

Matrix vec_row_major(const Matrix& a) {
  Matrix out(a.rows() * a.cols(), 1);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i * a.cols() + j, 0) = a(i, j);
  return out;
}

Matrix unvec_row_major(const Matrix& v, Index dim) {
  Matrix out(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) out(i, j) = v(i * dim + j, 0);
  return out;
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

Isometry::Isometry(Matrix m, Index db, Index dc) : j(std::move(m)), d_b(db), d_c(dc) {
  d_a = j.cols();
  if (db <= 0 || dc <= 0 || j.rows() != db * dc)
    throw std::invalid_argument("Isometry: output rows must equal d_b * d_c");
  if (d_a > db * dc)
    throw std::invalid_argument("Isometry: input dimension exceeds output dimension");
  Matrix gram = j.adjoint() * j;
  if (max_abs(gram - Matrix::Identity(d_a, d_a)) > tol::iso)
    throw std::invalid_argument("Isometry: J^dag J deviates from identity");
}

Matrix Superoperator::apply(const Matrix& a) const {
  if (a.rows() != dim_in || a.cols() != dim_in)
    throw std::invalid_argument("Superoperator::apply: dimension mismatch");
  return unvec_row_major(action * vec_row_major(a), dim_out);
}

Superoperator Superoperator::identity(Index dim) {
  Superoperator s;
  s.dim_in = s.dim_out = dim;
  s.action = Matrix::Identity(dim * dim, dim * dim);
  return s;
}

Superoperator Superoperator::from_function(
    Index dim_in, Index dim_out, const std::function<Matrix(const Matrix&)>& f) {
  Superoperator s;
  s.dim_in = dim_in;
  s.dim_out = dim_out;
  s.action = Matrix(dim_out * dim_out, dim_in * dim_in);
  Matrix unit = Matrix::Zero(dim_in, dim_in);
  for (Index i = 0; i < dim_in; ++i)
    for (Index j = 0; j < dim_in; ++j) {
      unit(i, j) = 1.0;
      s.action.col(i * dim_in + j) = vec_row_major(f(unit));
      unit(i, j) = 0.0;
    }
  return s;
}

Superoperator Superoperator::compose(const Superoperator& other) const {
  if (dim_in != other.dim_out)
    throw std::invalid_argument("Superoperator::compose: dimension mismatch");
  Superoperator s;
  s.dim_in = other.dim_in;
  s.dim_out = dim_out;
  s.action = action * other.action;
  return s;
}

Superoperator Superoperator::partial_trace_map(DimSplit split, Side traced) {
  const Index dim = split.left * split.right;
  const Index out = traced == Side::right ? split.left : split.right;
  return from_function(dim, out,
                       [&](const Matrix& a) { return partial_trace(a, split, traced); });
}

void Pdi::validate(double tolerance) const {
  if (projectors.empty()) throw std::invalid_argument("Pdi: empty projector list");
  const Index d = dim();
  Matrix sum = Matrix::Zero(d, d);
  for (size_t a = 0; a < projectors.size(); ++a) {
    const Matrix& p = projectors[a];
    if (p.rows() != d || p.cols() != d)
      throw std::invalid_argument("Pdi: projector dimension mismatch");
    if (max_abs(p - p.adjoint()) > tolerance)
      throw std::invalid_argument("Pdi: projector is not Hermitian");
    if (max_abs(p * p - p) > tolerance)
      throw std::invalid_argument("Pdi: projector is not idempotent");
    for (size_t b = a + 1; b < projectors.size(); ++b)
      if (max_abs(p * projectors[b]) > tolerance)
        throw std::invalid_argument("Pdi: projectors are not mutually orthogonal");
    sum += p;
  }
  if (max_abs(sum - Matrix::Identity(d, d)) > tolerance)
    throw std::invalid_argument("Pdi: projectors do not sum to identity");
}

Pdi Pdi::blocks(const std::vector<Index>& dims) {
  Index total = 0;
  for (Index d : dims) total += d;
  Pdi pdi;
  Index at = 0;
  for (Index d : dims) {
    Matrix p = Matrix::Zero(total, total);
    p.block(at, at, d, d) = Matrix::Identity(d, d);
    pdi.projectors.push_back(std::move(p));
    at += d;
  }
  return pdi;
}

Matrix injection(Index ambient, Index offset, Index block) {
  if (offset < 0 || block < 0 || offset + block > ambient)
    throw std::invalid_argument("injection: block does not fit in ambient space");
  Matrix inj = Matrix::Zero(ambient, block);
  inj.block(offset, 0, block, block) = Matrix::Identity(block, block);
  return inj;
}

Matrix ChannelPair::apply_b(const Matrix& a) const {
  Matrix big = iso.j * a * iso.j.adjoint();
  return partial_trace(big, {iso.d_b, iso.d_c}, Side::right);
}

Matrix ChannelPair::apply_c(const Matrix& a) const {
  Matrix big = iso.j * a * iso.j.adjoint();
  return partial_trace(big, {iso.d_b, iso.d_c}, Side::left);
}

ChannelPair make_pair(const Isometry& iso) {
  ChannelPair pair;
  pair.iso = iso;
  pair.b_op = Superoperator::from_function(
      iso.d_a, iso.d_b, [&](const Matrix& a) { return pair.apply_b(a); });
  pair.c_op = Superoperator::from_function(
      iso.d_a, iso.d_c, [&](const Matrix& a) { return pair.apply_c(a); });
  return pair;
}

Isometry swap_outputs(const Isometry& iso) {
  Matrix p = factor_permutation({iso.d_b, iso.d_c}, {1, 0});
  return Isometry(p * iso.j, iso.d_c, iso.d_b);
}

double entropy_bias(const ChannelPair& pair, const Matrix& rho) {
  validate_density(rho);
  Matrix big = pair.iso.j * rho * pair.iso.j.adjoint();
  DimSplit split{pair.iso.d_b, pair.iso.d_c};
  Eigen::SelfAdjointEigenSolver<Matrix> sb(partial_trace(big, split, Side::right),
                                           Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Matrix> sc(partial_trace(big, split, Side::left),
                                           Eigen::EigenvaluesOnly);
  return entropy_of_eigenvalues(sb.eigenvalues()) -
         entropy_of_eigenvalues(sc.eigenvalues());
}

ChannelPair concatenate(const ChannelPair& p1, const ChannelPair& p2) {
  const Isometry& j1 = p1.iso;
  const Isometry& j2 = p2.iso;
  if (j2.d_a != j1.d_b)
    throw std::invalid_argument("concatenate: second input must match first B output");
  // (J2 (x) I_c1) J1 has output factors (b2, c2, c1); reorder to (b2, c1, c2).
  Matrix lifted = kron(j2.j, Matrix::Identity(j1.d_c, j1.d_c)) * j1.j;
  Matrix perm = factor_permutation({j2.d_b, j2.d_c, j1.d_c}, {0, 2, 1});
  return make_pair(Isometry(perm * lifted, j2.d_b, j1.d_c * j2.d_c));
}

double verify_degrading(const ChannelPair& pair, const Superoperator& d,
                        DegradeDirection direction) {
  const Superoperator& src = direction == DegradeDirection::b_to_c ? pair.b_op : pair.c_op;
  const Superoperator& dst = direction == DegradeDirection::b_to_c ? pair.c_op : pair.b_op;
  if (d.dim_in != src.dim_out || d.dim_out != dst.dim_out)
    throw std::invalid_argument("verify_degrading: degrading map dimension mismatch");
  const Index da = pair.iso.d_a;
  double worst = 0.0;
  Matrix unit = Matrix::Zero(da, da);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) {
      unit(i, j) = 1.0;
      worst = std::max(worst, operator_norm(dst.apply(unit) - d.apply(src.apply(unit))));
      unit(i, j) = 0.0;
    }
  return worst;
}

Superoperator build_composite_degrader(const Superoperator& inner,
                                        AntidegradablePart which,
                                        const ChannelPair& p1,
                                        const ChannelPair& p2) {
  DimSplit split{p1.iso.d_c, p2.iso.d_c};
  if (which == AntidegradablePart::first) {
    if (inner.dim_in != p1.iso.d_c || inner.dim_out != p1.iso.d_b)
      throw std::invalid_argument("build_composite_degrader: inner map must send c1 to b1");
    // F1 (x) F2 -> Tr(F2) B2(inner(F1))
    return p2.b_op.compose(inner).compose(
        Superoperator::partial_trace_map(split, Side::right));
  }
  if (inner.dim_in != p2.iso.d_c || inner.dim_out != p2.iso.d_b)
    throw std::invalid_argument("build_composite_degrader: inner map must send c2 to b2");
  // C1 (x) C2 -> Tr(C1) inner(C2)
  return inner.compose(Superoperator::partial_trace_map(split, Side::left));
}

}  // namespace qchan
