#include "qchan/gluing.hpp"

#include <cmath>
#include <stdexcept>

namespace qchan {

namespace {

void check_weights(const std::vector<double>& probs, size_t count) {
  if (probs.size() != count)
    throw std::invalid_argument("gluing: one weight required per part");
  double sum = 0.0;
  for (double p : probs) {
    if (p <= 0.0) throw std::invalid_argument("gluing: weights must be positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::sum)
    throw std::invalid_argument("gluing: weights must sum to 1");
}

}  // namespace

Isometry glue(const GluedSpec& spec) {
  const size_t n = spec.parts.size();
  if (n == 0) throw std::invalid_argument("glue: no parts");
  if (spec.weights.size() != n || spec.embeddings.size() != n)
    throw std::invalid_argument("glue: parts, weights and embeddings must align");
  std::vector<Matrix> embedded(n);
  for (size_t k = 0; k < n; ++k) {
    const Embedding& e = spec.embeddings[k];
    const Isometry& part = spec.parts[k];
    if (e.inj_a.rows() != spec.d_a || e.inj_a.cols() != part.d_a ||
        e.inj_b.rows() != spec.d_b || e.inj_b.cols() != part.d_b ||
        e.inj_c.rows() != spec.d_c || e.inj_c.cols() != part.d_c)
      throw std::invalid_argument("glue: embedding dimensions do not match part");
    embedded[k] = kron(e.inj_b, e.inj_c) * part.j * e.inj_a.adjoint();
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (max_abs(embedded[a].adjoint() * embedded[b]) > tol::iso)
        throw std::invalid_argument("glue: parts are not pairwise orthogonal");
  Matrix j = Matrix::Zero(spec.d_b * spec.d_c, spec.d_a);
  Matrix closure = Matrix::Zero(spec.d_a, spec.d_a);
  for (size_t k = 0; k < n; ++k) {
    j += spec.weights[k] * embedded[k];
    closure += spec.weights[k] * spec.weights[k] * embedded[k].adjoint() * embedded[k];
  }
  if (max_abs(closure - Matrix::Identity(spec.d_a, spec.d_a)) > tol::iso)
    throw std::invalid_argument("glue: weighted closure condition violated");
  return Isometry(std::move(j), spec.d_b, spec.d_c);
}

SubchannelMaps subchannel(const ChannelPair& pair, const Pdi& pdi, size_t index) {
  pdi.validate();
  if (index >= pdi.projectors.size())
    throw std::invalid_argument("subchannel: projector index out of range");
  if (pdi.dim() != pair.iso.d_a)
    throw std::invalid_argument("subchannel: PDI does not act on the channel input");
  const Matrix p = pdi.projectors[index];
  SubchannelMaps maps;
  maps.b = Superoperator::from_function(
      pair.iso.d_a, pair.iso.d_b,
      [&](const Matrix& a) { return pair.apply_b(p * a * p); });
  maps.c = Superoperator::from_function(
      pair.iso.d_a, pair.iso.d_c,
      [&](const Matrix& a) { return pair.apply_c(p * a * p); });
  return maps;
}

Isometry glue_convex(const std::vector<Isometry>& parts,
                     const std::vector<double>& probs) {
  check_weights(probs, parts.size());
  const Index da = parts.front().d_a, db = parts.front().d_b;
  Index dc = 0;
  for (const Isometry& part : parts) {
    if (part.d_a != da || part.d_b != db)
      throw std::invalid_argument("glue_convex: parts must share input and B output");
    dc += part.d_c;
  }
  GluedSpec spec;
  spec.d_a = da;
  spec.d_b = db;
  spec.d_c = dc;
  Index at = 0;
  for (size_t k = 0; k < parts.size(); ++k) {
    spec.parts.push_back(parts[k]);
    spec.weights.push_back(std::sqrt(probs[k]));
    spec.embeddings.push_back({Matrix::Identity(da, da), Matrix::Identity(db, db),
                               injection(dc, at, parts[k].d_c)});
    at += parts[k].d_c;
  }
  return glue(spec);
}

Isometry glue_input_and_complement(const std::vector<Isometry>& parts) {
  if (parts.empty()) throw std::invalid_argument("glue_input_and_complement: no parts");
  const Index db = parts.front().d_b;
  Index da = 0, dc = 0;
  for (const Isometry& part : parts) {
    if (part.d_b != db)
      throw std::invalid_argument("glue_input_and_complement: parts must share B output");
    da += part.d_a;
    dc += part.d_c;
  }
  GluedSpec spec;
  spec.d_a = da;
  spec.d_b = db;
  spec.d_c = dc;
  Index at_a = 0, at_c = 0;
  for (const Isometry& part : parts) {
    spec.parts.push_back(part);
    spec.weights.push_back(1.0);
    spec.embeddings.push_back({injection(da, at_a, part.d_a), Matrix::Identity(db, db),
                               injection(dc, at_c, part.d_c)});
    at_a += part.d_a;
    at_c += part.d_c;
  }
  return glue(spec);
}

Isometry glue_block_diagonal(const std::vector<Isometry>& parts,
                             const std::vector<double>& probs) {
  check_weights(probs, parts.size());
  const Index da = parts.front().d_a;
  Index db = 0, dc = 0;
  for (const Isometry& part : parts) {
    if (part.d_a != da)
      throw std::invalid_argument("glue_block_diagonal: parts must share the input");
    db += part.d_b;
    dc += part.d_c;
  }
  GluedSpec spec;
  spec.d_a = da;
  spec.d_b = db;
  spec.d_c = dc;
  Index at_b = 0, at_c = 0;
  for (size_t k = 0; k < parts.size(); ++k) {
    spec.parts.push_back(parts[k]);
    spec.weights.push_back(std::sqrt(probs[k]));
    spec.embeddings.push_back({Matrix::Identity(da, da), injection(db, at_b, parts[k].d_b),
                               injection(dc, at_c, parts[k].d_c)});
    at_b += parts[k].d_b;
    at_c += parts[k].d_c;
  }
  return glue(spec);
}

Isometry glue_direct_sum(const std::vector<Isometry>& parts) {
  if (parts.empty()) throw std::invalid_argument("glue_direct_sum: no parts");
  Index da = 0, db = 0, dc = 0;
  for (const Isometry& part : parts) {
    da += part.d_a;
    db += part.d_b;
    dc += part.d_c;
  }
  GluedSpec spec;
  spec.d_a = da;
  spec.d_b = db;
  spec.d_c = dc;
  Index at_a = 0, at_b = 0, at_c = 0;
  for (const Isometry& part : parts) {
    spec.parts.push_back(part);
    spec.weights.push_back(1.0);
    spec.embeddings.push_back({injection(da, at_a, part.d_a), injection(db, at_b, part.d_b),
                               injection(dc, at_c, part.d_c)});
    at_a += part.d_a;
    at_b += part.d_b;
    at_c += part.d_c;
  }
  return glue(spec);
}

Matrix slice(const Matrix& j_matrix, const Pdi& p, const Pdi& q, const Pdi& r,
             size_t jp, size_t kq, size_t lr) {
  if (jp >= p.projectors.size() || kq >= q.projectors.size() || lr >= r.projectors.size())
    throw std::invalid_argument("slice: projector index out of range");
  if (j_matrix.cols() != p.dim() || j_matrix.rows() != q.dim() * r.dim())
    throw std::invalid_argument("slice: PDI dimensions do not match isometry");
  return kron(q.projectors[kq], r.projectors[lr]) * j_matrix * p.projectors[jp];
}

double slice_proportionality_residual(const Matrix& k, const Matrix& p) {
  if (k.cols() != p.rows() || p.rows() != p.cols())
    throw std::invalid_argument("slice_proportionality_residual: dimension mismatch");
  const Matrix gram = k.adjoint() * k;
  const double tr_p = p.trace().real();
  if (std::abs(tr_p) < tol::eig_clip)
    throw std::invalid_argument("slice_proportionality_residual: projector has zero trace");
  return max_abs(gram - (gram.trace().real() / tr_p) * p);
}

}  // namespace qchan
