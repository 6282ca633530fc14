#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qchan/channels.hpp"
#include "qchan/erasure.hpp"
#include "qchan/gluing.hpp"
#include "qchan/qubit.hpp"
#include "qchan/random.hpp"
#include "test_support.hpp"

using namespace qchan;
using testutil::hb;

namespace {

Matrix embed_block(const Matrix& m, Index dim, Index offset) {
  Matrix out = Matrix::Zero(dim, dim);
  out.block(offset, offset, m.rows(), m.cols()) = m;
  return out;
}

}  // namespace

TEST_CASE("gluing a single part with identity embeddings returns the part") {
  Isometry part = amplitude_damping_iso(0.3);
  GluedSpec spec;
  spec.parts = {part};
  spec.weights = {1.0};
  spec.embeddings = {{Matrix::Identity(2, 2), Matrix::Identity(2, 2),
                      Matrix::Identity(2, 2)}};
  spec.d_a = 2;
  spec.d_b = 2;
  spec.d_c = 2;
  Isometry glued = glue(spec);
  CHECK(glued.d_b == 2);
  CHECK(glued.d_c == 2);
  CHECK(max_abs(glued.j - part.j) < 1e-14);
}

TEST_CASE("glue validates weights, closure, and shape agreement") {
  Isometry part = perfect_iso(2);
  GluedSpec spec;
  spec.parts = {part};
  spec.weights = {0.9};  // breaks the weighted closure condition
  spec.embeddings = {{Matrix::Identity(2, 2), Matrix::Identity(2, 2),
                      Matrix::Identity(1, 1)}};
  spec.d_a = 2;
  spec.d_b = 2;
  spec.d_c = 1;
  CHECK_THROWS_AS(glue(spec), std::invalid_argument);

  GluedSpec mismatched;
  mismatched.parts = {part};
  mismatched.weights = {1.0, 0.5};
  mismatched.embeddings = {{Matrix::Identity(2, 2), Matrix::Identity(2, 2),
                            Matrix::Identity(1, 1)}};
  mismatched.d_a = 2;
  mismatched.d_b = 2;
  mismatched.d_c = 1;
  CHECK_THROWS_AS(glue(mismatched), std::invalid_argument);
}

TEST_CASE("block-diagonal gluing of identity and swap parts is flagged erasure") {
  std::vector<Isometry> parts = {perfect_iso(2), perfect_swap_iso(2)};
  Isometry glued = glue_block_diagonal(parts, {0.7, 0.3});
  Isometry reference = erasure_pair(0.3, 2).assembled.iso;
  REQUIRE(glued.d_b == reference.d_b);
  REQUIRE(glued.d_c == reference.d_c);
  CHECK(max_abs(glued.j - reference.j) < 1e-14);

  ChannelPair pair = make_pair(glued);
  Matrix rho(2, 2);
  rho << Complex(0.6), Complex(0.1, 0.05), Complex(0.1, -0.05), Complex(0.4);
  Matrix b = pair.apply_b(rho);
  CHECK(max_abs(b.block(0, 0, 2, 2) - 0.7 * rho) < 1e-14);
  CHECK(std::abs(b(2, 2) - Complex(0.3)) < 1e-14);
  Matrix c = pair.apply_c(rho);
  CHECK(std::abs(c(0, 0) - Complex(0.7)) < 1e-14);
  CHECK(max_abs(c.block(1, 1, 2, 2) - 0.3 * rho) < 1e-14);
}

TEST_CASE("block-diagonal gluing splits both entropies exactly") {
  std::vector<Isometry> parts = {perfect_iso(2), perfect_swap_iso(2)};
  ChannelPair pair = make_pair(glue_block_diagonal(parts, {0.7, 0.3}));

  Matrix half = Matrix::Identity(2, 2) * 0.5;
  // Output spectrum {0.35, 0.35, 0.3}: part entropies plus the mixing entropy.
  CHECK(std::abs(von_neumann_entropy(pair.apply_b(half)) -
                 1.5812908992306927) < 1e-12);

  // Bias of the glued pair = weighted sum of part biases (mixing terms cancel).
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = 0.6;
  rho(1, 1) = 0.4;
  double expected = (0.7 - 0.3) * hb(0.4);
  CHECK(std::abs(entropy_bias(pair, rho) - expected) < 1e-12);
}

TEST_CASE("convex gluing of identity and phase-flip parts gives phase damping") {
  Isometry flip(pauli_z(), 2, 1);
  std::vector<Isometry> parts = {perfect_iso(2), flip};
  ChannelPair glued = make_pair(glue_convex(parts, {0.8, 0.2}));
  ChannelPair reference = make_pair(dephasing_iso(0.2));

  REQUIRE(glued.b_op.dim_out == 2);
  CHECK(max_abs(glued.b_op.action - reference.b_op.action) < 1e-13);

  // Complements of a shared direct channel have equal output entropy.
  RandomSource rs(11);
  for (int i = 0; i < 5; ++i) {
    Matrix rho = rs.density(2);
    CHECK(std::abs(von_neumann_entropy(glued.apply_c(rho)) -
                   von_neumann_entropy(reference.apply_c(rho))) < 1e-11);
    CHECK(std::abs(entropy_bias(glued, rho) - entropy_bias(reference, rho)) <
          1e-11);
  }
}

TEST_CASE("convex gluing validates its mixing distribution") {
  std::vector<Isometry> parts = {perfect_iso(2), Isometry(pauli_z(), 2, 1)};
  CHECK_THROWS_AS(glue_convex(parts, {0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(glue_convex(parts, {1.2, -0.2}), std::invalid_argument);
  CHECK_THROWS_AS(glue_convex(parts, {1.0}), std::invalid_argument);
}

TEST_CASE("input-and-complement gluing keeps part actions on input blocks") {
  std::vector<Isometry> parts = {amplitude_damping_iso(0.3),
                                 amplitude_damping_iso(0.6)};
  Isometry glued = glue_input_and_complement(parts);
  REQUIRE(glued.d_b == 2);
  REQUIRE(glued.d_c == 4);
  ChannelPair pair = make_pair(glued);
  ChannelPair p0 = make_pair(parts[0]);
  ChannelPair p1 = make_pair(parts[1]);

  RandomSource rs(5);
  Matrix a0 = rs.density(2);
  Matrix a1 = rs.density(2);
  Matrix blockdiag = Matrix::Zero(4, 4);
  blockdiag.block(0, 0, 2, 2) = 0.5 * a0;
  blockdiag.block(2, 2, 2, 2) = 0.5 * a1;

  // Shared direct output adds the block images.
  Matrix b = pair.apply_b(blockdiag);
  CHECK(max_abs(b - 0.5 * p0.apply_b(a0) - 0.5 * p1.apply_b(a1)) < 1e-13);

  // Complements land in orthogonal blocks.
  Matrix c = pair.apply_c(blockdiag);
  Matrix c_expected = embed_block(0.5 * p0.apply_c(a0), 4, 0) +
                      embed_block(0.5 * p1.apply_c(a1), 4, 2);
  CHECK(max_abs(c - c_expected) < 1e-13);

  // Off-diagonal input blocks are annihilated on the shared output.
  Matrix offdiag = Matrix::Zero(4, 4);
  offdiag(0, 2) = 1.0;
  offdiag(3, 1) = 0.5;
  CHECK(max_abs(pair.apply_b(offdiag)) < 1e-13);
}

TEST_CASE("direct-sum gluing confines both outputs to part blocks") {
  std::vector<Isometry> parts = {amplitude_damping_iso(0.3), perfect_iso(2)};
  Isometry glued = glue_direct_sum(parts);
  REQUIRE(glued.d_b == 4);
  REQUIRE(glued.d_c == 3);
  ChannelPair pair = make_pair(glued);
  ChannelPair p0 = make_pair(parts[0]);
  ChannelPair p1 = make_pair(parts[1]);

  RandomSource rs(7);
  Matrix a0 = rs.density(2);
  Matrix a1 = rs.density(2);
  Matrix blockdiag = Matrix::Zero(4, 4);
  blockdiag.block(0, 0, 2, 2) = 0.4 * a0;
  blockdiag.block(2, 2, 2, 2) = 0.6 * a1;

  Matrix b = pair.apply_b(blockdiag);
  Matrix b_expected = embed_block(0.4 * p0.apply_b(a0), 4, 0) +
                      embed_block(0.6 * p1.apply_b(a1), 4, 2);
  CHECK(max_abs(b - b_expected) < 1e-13);

  Matrix c = pair.apply_c(blockdiag);
  Matrix c_expected = embed_block(0.4 * p0.apply_c(a0), 3, 0) +
                      embed_block(0.6 * p1.apply_c(a1), 3, 2);
  CHECK(max_abs(c - c_expected) < 1e-13);

  // With both outputs block-orthogonal, off-diagonal input vanishes entirely.
  Matrix offdiag = Matrix::Zero(4, 4);
  offdiag(1, 2) = 1.0;
  offdiag(2, 1) = 1.0;
  CHECK(max_abs(pair.apply_b(offdiag)) < 1e-13);
  CHECK(max_abs(pair.apply_c(offdiag)) < 1e-13);
}

TEST_CASE("subchannel restriction matches the full pair on a trivial split") {
  ChannelPair pair = make_pair(amplitude_damping_iso(0.3));
  Pdi whole = Pdi::blocks({2});
  SubchannelMaps maps = subchannel(pair, whole, 0);
  RandomSource rs(3);
  Matrix a = rs.hermitian(2);
  CHECK(max_abs(maps.b.apply(a) - pair.apply_b(a)) < 1e-13);
  CHECK(max_abs(maps.c.apply(a) - pair.apply_c(a)) < 1e-13);
}

TEST_CASE("subchannels add up exactly on block-diagonal inputs only") {
  RandomSource rs(17);
  ChannelPair pair = make_pair(rs.isometry(4, 2, 4));
  Pdi pdi = Pdi::blocks({2, 2});
  SubchannelMaps m0 = subchannel(pair, pdi, 0);
  SubchannelMaps m1 = subchannel(pair, pdi, 1);

  Matrix blockdiag = Matrix::Zero(4, 4);
  blockdiag.block(0, 0, 2, 2) = 0.5 * rs.density(2);
  blockdiag.block(2, 2, 2, 2) = 0.5 * rs.density(2);
  CHECK(max_abs(m0.b.apply(blockdiag) + m1.b.apply(blockdiag) -
                pair.apply_b(blockdiag)) < 1e-12);

  Matrix generic = rs.density(4);
  CHECK(max_abs(m0.b.apply(generic) + m1.b.apply(generic) -
                pair.apply_b(generic)) > 1e-6);
}

TEST_CASE("slices of flagged erasure reassemble it and stay proportional") {
  Isometry iso = erasure_pair(0.3, 2).assembled.iso;
  Pdi p = Pdi::blocks({2});
  Pdi q = Pdi::blocks({2, 1});
  Pdi r = Pdi::blocks({1, 2});

  Matrix sum = Matrix::Zero(iso.j.rows(), iso.j.cols());
  int nonzero = 0;
  for (size_t k = 0; k < 2; ++k) {
    for (size_t l = 0; l < 2; ++l) {
      Matrix piece = slice(iso.j, p, q, r, 0, k, l);
      sum += piece;
      if (max_abs(piece) > 1e-12) ++nonzero;
      CHECK(slice_proportionality_residual(piece, p.projectors[0]) < 1e-13);
    }
  }
  CHECK(max_abs(sum - iso.j) < 1e-14);
  CHECK(nonzero == 2);

  // The two live slices are the weighted parts: transmit pairs direct block 0
  // with the leading complement slot, flagging pairs the trailing blocks.
  Matrix transmit = slice(iso.j, p, q, r, 0, 0, 0);
  CHECK(std::abs(transmit.col(0).norm() - std::sqrt(0.7)) < 1e-13);
  Matrix gram = transmit.adjoint() * transmit;
  CHECK(max_abs(gram - 0.7 * Matrix::Identity(2, 2)) < 1e-13);

  Matrix flagged = slice(iso.j, p, q, r, 0, 1, 1);
  Matrix gram2 = flagged.adjoint() * flagged;
  CHECK(max_abs(gram2 - 0.3 * Matrix::Identity(2, 2)) < 1e-13);
}

TEST_CASE("generic isometries produce slices that fail proportionality") {
  RandomSource rs(23);
  Isometry iso = rs.isometry(4, 2, 4);
  Pdi p = rs.pdi({2, 2});
  Pdi q = Pdi::blocks({1, 1});
  Pdi r = Pdi::blocks({2, 2});
  double worst = 0.0;
  for (size_t jp = 0; jp < 2; ++jp)
    for (size_t k = 0; k < 2; ++k)
      for (size_t l = 0; l < 2; ++l) {
        Matrix piece = slice(iso.j, p, q, r, jp, k, l);
        worst = std::max(worst,
                         slice_proportionality_residual(piece, p.projectors[jp]));
      }
  CHECK(worst > 1e-6);

  // Reassembly over all three indices is still exact.
  Matrix sum = Matrix::Zero(iso.j.rows(), iso.j.cols());
  for (size_t jp = 0; jp < 2; ++jp)
    for (size_t k = 0; k < 2; ++k)
      for (size_t l = 0; l < 2; ++l) sum += slice(iso.j, p, q, r, jp, k, l);
  CHECK(max_abs(sum - iso.j) < 1e-13);
}
