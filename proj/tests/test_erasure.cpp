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

TEST_CASE("erasure coherent information follows the piecewise-linear law") {
  ErasureQ1 a = erasure_q1(0.25, 2);
  CHECK(a.q1_b == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(a.q1_c == doctest::Approx(0.0).epsilon(1e-12));

  ErasureQ1 b = erasure_q1(0.5, 3);
  CHECK(std::abs(b.q1_b) < 1e-12);
  CHECK(std::abs(b.q1_c) < 1e-12);

  ErasureQ1 c = erasure_q1(0.75, 4);
  CHECK(std::abs(c.q1_b) < 1e-12);
  CHECK(c.q1_c == doctest::Approx(1.0).epsilon(1e-12));

  for (Index d = 2; d <= 4; ++d) {
    for (double lam = 0.0; lam <= 1.0 + 1e-12; lam += 0.1) {
      ErasureQ1 r = erasure_q1(lam, d);
      double logd = std::log2(static_cast<double>(d));
      CHECK(std::abs(r.q1_b - std::max(1.0 - 2.0 * lam, 0.0) * logd) < 1e-12);
      CHECK(std::abs(r.q1_c - std::max(2.0 * lam - 1.0, 0.0) * logd) < 1e-12);
    }
  }
}

TEST_CASE("flagged erasure block structure at lambda = 0.3") {
  GeneralizedErasure g = erasure_pair(0.3, 2);
  CHECK(g.d_b1 == 2);
  CHECK(g.d_c1 == 1);
  Matrix rho(2, 2);
  rho << Complex(0.6), Complex(0.1, 0.2), Complex(0.1, -0.2), Complex(0.4);

  Matrix b = g.assembled.apply_b(rho);
  REQUIRE(b.rows() == 3);
  CHECK(max_abs(b.block(0, 0, 2, 2) - 0.7 * rho) < 1e-14);
  CHECK(std::abs(b(2, 2) - Complex(0.3)) < 1e-14);
  CHECK(std::abs(b(0, 2)) < 1e-14);
  CHECK(std::abs(b(2, 1)) < 1e-14);

  Matrix c = g.assembled.apply_c(rho);
  REQUIRE(c.rows() == 3);
  CHECK(std::abs(c(0, 0) - Complex(0.7)) < 1e-14);
  CHECK(max_abs(c.block(1, 1, 2, 2) - 0.3 * rho) < 1e-14);
  CHECK(std::abs(c(0, 1)) < 1e-14);
}

TEST_CASE("erasure limits: nothing erased and everything erased") {
  Matrix rho(2, 2);
  rho << Complex(0.75), Complex(0.2), Complex(0.2), Complex(0.25);

  GeneralizedErasure none = erasure_pair(0.0, 2);
  Matrix b0 = none.assembled.apply_b(rho);
  CHECK(max_abs(b0.block(0, 0, 2, 2) - rho) < 1e-14);
  CHECK(std::abs(b0(2, 2)) < 1e-14);

  GeneralizedErasure all = erasure_pair(1.0, 2);
  Matrix b1 = all.assembled.apply_b(rho);
  CHECK(max_abs(b1.block(0, 0, 2, 2)) < 1e-14);
  CHECK(std::abs(b1(2, 2) - Complex(1.0)) < 1e-14);
  Matrix c1 = all.assembled.apply_c(rho);
  CHECK(max_abs(c1.block(1, 1, 2, 2) - rho) < 1e-14);

  CHECK_THROWS_AS(erasure_pair(-0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(erasure_pair(1.1, 2), std::invalid_argument);
}

TEST_CASE("entropy bias of erasure is (1 - 2 lambda) times the input entropy") {
  RandomSource rs(29);
  std::vector<Matrix> states;
  states.push_back(Matrix::Identity(2, 2) * 0.5);
  Matrix pure = Matrix::Zero(2, 2);
  pure(0, 0) = 1.0;
  states.push_back(pure);
  for (int i = 0; i < 3; ++i) states.push_back(rs.density(2));

  ChannelPair half = erasure_pair(0.5, 2).assembled;
  ChannelPair strong = erasure_pair(0.55, 2).assembled;
  for (const Matrix& rho : states) {
    CHECK(std::abs(entropy_bias(half, rho)) < 1e-12);
    double s = von_neumann_entropy(rho);
    CHECK(std::abs(entropy_bias(strong, rho) - (1.0 - 2.0 * 0.55) * s) < 1e-12);
    CHECK(entropy_bias(strong, rho) < 1e-12);
  }
}

TEST_CASE("erasure complement is the complementary-rate channel relabeled") {
  // C at rate lambda has blocks (flag, pass); B at rate 1 - lambda has
  // (pass, flag).  A cyclic relabeling identifies them.
  const double lambda = 0.3;
  ChannelPair low = erasure_pair(lambda, 2).assembled;
  ChannelPair high = erasure_pair(1.0 - lambda, 2).assembled;
  Matrix perm = Matrix::Zero(3, 3);
  perm(0, 1) = 1.0;  // pass component 1 -> slot 0
  perm(1, 2) = 1.0;  // pass component 2 -> slot 1
  perm(2, 0) = 1.0;  // flag -> last slot
  RandomSource rs(31);
  for (int i = 0; i < 4; ++i) {
    Matrix rho = rs.density(2);
    Matrix relabeled = perm * low.apply_c(rho) * perm.adjoint();
    CHECK(max_abs(relabeled - high.apply_b(rho)) < 1e-13);
  }
}

TEST_CASE("degrading map carries the direct channel onto the complement") {
  RandomSource rs(37);
  for (double lambda : {0.2, 0.45}) {
    ChannelPair pair = erasure_pair(lambda, 2).assembled;
    Superoperator d = flagged_erasure_degrader(lambda, 2);
    CHECK(verify_degrading(pair, d, DegradeDirection::b_to_c) < 1e-10);
    for (int i = 0; i < 3; ++i) {
      Matrix rho = rs.density(2);
      CHECK(max_abs(d.apply(pair.apply_b(rho)) - pair.apply_c(rho)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(flagged_erasure_degrader(0.6, 2), std::invalid_argument);
}

TEST_CASE("generalized erasure around damping matches the closed block form") {
  const double p = 0.3, lambda = 0.2;
  GeneralizedErasure g = generalized_erasure(amplitude_damping_iso(p), lambda);
  CHECK(g.d_b1 == 2);
  CHECK(g.d_c1 == 2);

  BlochVector r{0.3, 0.4, 0.5};
  Matrix rho = bloch_to_rho(r);
  Matrix b1 = bloch_to_rho(amplitude_bloch_b(p, r));
  Matrix c1 = bloch_to_rho(amplitude_bloch_c(p, r));

  Matrix b = g.assembled.apply_b(rho);
  REQUIRE(b.rows() == 3);
  CHECK(max_abs(b.block(0, 0, 2, 2) - (1.0 - lambda) * b1) < 1e-13);
  CHECK(std::abs(b(2, 2) - Complex(lambda)) < 1e-13);

  Matrix c = g.assembled.apply_c(rho);
  REQUIRE(c.rows() == 4);
  CHECK(max_abs(c.block(0, 0, 2, 2) - (1.0 - lambda) * c1) < 1e-13);
  CHECK(max_abs(c.block(2, 2, 2, 2) - lambda * rho) < 1e-13);
  CHECK(max_abs(Matrix(c.block(0, 2, 2, 2))) < 1e-13);
}

TEST_CASE("flag insertion commutes with the inner channel") {
  // Erasing after the inner channel and erasing before it (with the flag
  // carried through untouched) assemble the same direct channel.
  const double p = 0.3, lambda = 0.2;
  GeneralizedErasure g = generalized_erasure(amplitude_damping_iso(p), lambda);

  // Erase after: inner pair, then a flagged identity on its direct output.
  ChannelPair inner = make_pair(amplitude_damping_iso(p));
  ChannelPair erase_after =
      concatenate(inner, erasure_pair(lambda, 2).assembled);

  // Erase before: flagged identity, then the inner channel extended to act
  // trivially on the flag block.
  ChannelPair extended =
      make_pair(glue_direct_sum({amplitude_damping_iso(p), perfect_iso(1)}));
  ChannelPair erase_before =
      concatenate(erasure_pair(lambda, 2).assembled, extended);

  RandomSource rs(41);
  for (int i = 0; i < 4; ++i) {
    Matrix rho = rs.density(2);
    Matrix reference = g.assembled.apply_b(rho);
    CHECK(max_abs(erase_after.apply_b(rho) - reference) < 1e-13);
    CHECK(max_abs(erase_before.apply_b(rho) - reference) < 1e-13);
    // Complements differ by layout only, so the bias agrees.
    double bias = entropy_bias(g.assembled, rho);
    CHECK(std::abs(entropy_bias(erase_after, rho) - bias) < 1e-11);
    CHECK(std::abs(entropy_bias(erase_before, rho) - bias) < 1e-11);
  }
}

TEST_CASE("composite erasure rate and the zero-coherent-information window") {
  CHECK(incomplete_erasure_epsilon(0.8, 0.25) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(incomplete_erasure_epsilon(1.0, 0.3) == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(incomplete_erasure_epsilon(0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-14));

  // Zero exactly when the composite rate reaches one half.
  CHECK(zero_capacity_interval(0.8, 0.25));
  CHECK(zero_capacity_interval(0.8, 0.375));  // epsilon = 0.5 boundary
  CHECK_FALSE(zero_capacity_interval(0.8, 0.45));
  CHECK_FALSE(zero_capacity_interval(0.4, 0.1));  // mu < 1/2: never zero
  CHECK_FALSE(zero_capacity_interval(0.4, 0.0));

  // Consistency: inside the window the composite complement rate is >= 1/2.
  for (double mu : {0.6, 0.8, 1.0}) {
    for (double lam = 0.0; lam <= 0.5 + 1e-12; lam += 0.05) {
      bool inside = zero_capacity_interval(mu, lam);
      double eps = incomplete_erasure_epsilon(mu, lam);
      CHECK(inside == (eps >= 0.5 - 1e-12));
    }
  }
}
