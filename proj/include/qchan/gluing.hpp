#pragma once

#include "qchan/channels.hpp"

namespace qchan {

// Placement of one part inside the glued ambient spaces.  Each injection has
// orthonormal columns; an identity matrix marks a part already living in the
// ambient space.
struct Embedding {
  Matrix inj_a, inj_b, inj_c;
};

// Glued isometry J = sum_j nu_j (inj_b_j (x) inj_c_j) J_j inj_a_j^dag.
// Parts must be pairwise orthogonal and the weighted closure condition
// sum_j nu_j^2 J_j^dag J_j = I_a must hold on the ambient input space.
struct GluedSpec {
  std::vector<Isometry> parts;
  std::vector<double> weights;
  std::vector<Embedding> embeddings;
  Index d_a = 0, d_b = 0, d_c = 0;
};

Isometry glue(const GluedSpec& spec);

// Restriction maps A -> B(P_j A P_j), A -> C(P_j A P_j) for one projector of
// an input-space PDI.
struct SubchannelMaps {
  Superoperator b, c;
};
SubchannelMaps subchannel(const ChannelPair& pair, const Pdi& pdi, size_t index);

// Convex combination: parts share input and B-output, complements go to
// orthogonal blocks; B(A) = sum_j p_j B_j(A).
Isometry glue_convex(const std::vector<Isometry>& parts,
                     const std::vector<double>& probs);

// Input-and-complement gluing: part j consumes input block j (unit weights),
// all parts share the B output; B(A) = sum_j B_j(P_j A P_j).
Isometry glue_input_and_complement(const std::vector<Isometry>& parts);

// Block-diagonal gluing: parts share the input, both outputs go to orthogonal
// blocks; B(A) = direct sum of p_j B_j(A).
Isometry glue_block_diagonal(const std::vector<Isometry>& parts,
                             const std::vector<double>& probs);

// Direct sum: part j consumes input block j, both outputs in orthogonal
// blocks; B(A) = direct sum of B_j(P_j A P_j).
Isometry glue_direct_sum(const std::vector<Isometry>& parts);

// K = (Q_k (x) R_l) J P_j for PDIs P (input), Q (B output), R (C output).
Matrix slice(const Matrix& j_matrix, const Pdi& p, const Pdi& q, const Pdi& r,
             size_t jp, size_t kq, size_t lr);

// Max-entry residual of K^dag K against proportionality to the input
// projector: || K^dag K - (Tr(K^dag K)/Tr(P)) P ||_max.
double slice_proportionality_residual(const Matrix& k, const Matrix& p);

}  // namespace qchan
