#include <doctest.h>

#include <cmath>
#include <vector>

#include "qchan/coherent_info.hpp"
#include "qchan/erasure.hpp"
#include "qchan/gluing.hpp"
#include "qchan/qubit.hpp"
#include "qchan/random.hpp"
#include "test_support.hpp"

using namespace qchan;

namespace {

OptimizerConfig quick_cfg() {
  OptimizerConfig cfg;
  cfg.multistart_count = 6;
  return cfg;
}

}  // namespace

TEST_CASE("scalar maximizer finds interior, boundary, and near-edge optima") {
  OptimizerConfig cfg;

  // Smooth interior maximum of -(x - 0.3)^2 at 0.3.
  Scan1DResult interior = maximize_scalar(
      [](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, cfg);
  CHECK(std::abs(interior.best_x - 0.3) < 1e-9);
  CHECK(std::abs(interior.best_f) < 1e-15);
  CHECK(interior.evaluations > 0);

  // Monotone function peaks at the boundary.
  Scan1DResult edge =
      maximize_scalar([](double x) { return x; }, 0.0, 1.0, cfg);
  CHECK(std::abs(edge.best_x - 1.0) < 1e-10);

  // -x ln x + (1 + ln 1e-9) x has its maximum at x = 1e-9, far below the
  // coarse grid spacing; the endpoint ladder must resolve it.
  const double beta = 1.0 + std::log(1e-9);
  Scan1DResult tiny = maximize_scalar(
      [&](double x) {
        return x > 0.0 ? -x * std::log(x) + beta * x : 0.0;
      },
      0.0, 1.0, cfg);
  CHECK(tiny.best_x > 1e-10);
  CHECK(tiny.best_x < 1e-8);
  CHECK(std::abs(tiny.best_x - 1e-9) / 1e-9 < 0.05);
}

TEST_CASE("fast bias agrees with the validated bias") {
  ChannelPair pair = erasure_pair(0.3, 2).assembled;
  RandomSource rs(47);
  for (int i = 0; i < 4; ++i) {
    Matrix rho = rs.density(2);
    CHECK(std::abs(entropy_bias_fast(pair, rho) - entropy_bias(pair, rho)) <
          1e-13);
  }
}

TEST_CASE("glued damping axis optimum matches a dense plane search") {
  const double p = 0.25, lambda = 0.2;
  OptimizerConfig cfg;
  CoherentInfoResult axis = q1_amplitude_glued(p, lambda, cfg);
  CHECK(axis.q1_b == doctest::Approx(0.135786430656).epsilon(1e-9));
  CHECK(std::abs(axis.argmax_param - 0.231862) < 1e-3);

  // Independent dense grid over the full (x, z) half-disk.
  testutil::PlaneMax plane = testutil::grid_max_plane(
      [&](double x, double z) { return testutil::ad_flag_bias(p, lambda, x, z); });
  CHECK(std::abs(axis.q1_b - plane.value) < 1e-6);

  // Complement side frozen value at a point where it is positive.
  CoherentInfoResult c = q1_amplitude_glued(0.25, 0.3, cfg);
  CHECK(c.q1_c == doctest::Approx(0.0440201309847).epsilon(1e-8));
  CHECK(std::abs(c.argmin_param - (-0.711107)) < 1e-3);
}

TEST_CASE("pure damping channel values and degenerate limits") {
  OptimizerConfig cfg;
  CoherentInfoResult r = q1_amplitude_glued(0.3, 0.0, cfg);
  CHECK(r.q1_b == doctest::Approx(0.327954761914).epsilon(1e-9));
  CHECK(r.q1_c < 1e-8);

  CoherentInfoResult s = q1_amplitude_glued(0.25, 0.0, cfg);
  CHECK(s.q1_b == doctest::Approx(0.415037499279).epsilon(1e-9));

  // p = 0 reduces to plain erasure on one qubit.
  for (double lambda : {0.0, 0.2, 0.3, 0.5, 0.7}) {
    CoherentInfoResult e = q1_amplitude_glued(0.0, lambda, cfg);
    ErasureQ1 closed = erasure_q1(lambda, 2);
    CHECK(std::abs(e.q1_b - closed.q1_b) < 1e-9);
    CHECK(std::abs(e.q1_c - closed.q1_c) < 1e-9);
  }
}

TEST_CASE("glued damping values near the positivity edge") {
  const double p = 0.25;
  const double l0 = lambda0(p);
  OptimizerConfig cfg;

  CoherentInfoResult a = q1_amplitude_glued(p, l0 - 0.04, cfg);
  CHECK(a.q1_b == doctest::Approx(0.0169118100303).epsilon(1e-8));
  CHECK(std::abs(a.argmax_param - 0.64035753137) < 1e-5);

  CoherentInfoResult b = q1_amplitude_glued(p, l0 - 0.05, cfg);
  CHECK(b.q1_b == doctest::Approx(0.0274964823041).epsilon(1e-8));
  CHECK(std::abs(b.argmax_param - 0.543173523947) < 1e-5);

  // Beyond the boundary the bias is nonpositive.
  CoherentInfoResult past = q1_amplitude_glued(p, l0 + 0.02, cfg);
  CHECK(past.q1_b < 1e-8);
}

TEST_CASE("flagged phase-damping values and maximizer migration") {
  const double p = 0.25;
  OptimizerConfig cfg;

  CoherentInfoResult a = q1_dephrasure(p, 0.05, cfg);
  CHECK(a.q1_b == doctest::Approx(0.129285781764).epsilon(1e-8));
  CHECK(a.q1_c == doctest::Approx(2.11664338901e-6).epsilon(1e-3));
  CHECK(std::abs(std::abs(a.argmin_param) - 0.99994129291) < 1e-4);

  CoherentInfoResult b = q1_dephrasure(p, 0.17, cfg);
  CHECK(b.q1_b == doctest::Approx(0.000555001947981).epsilon(1e-6));
  CHECK(b.q1_c == doctest::Approx(0.0220714739906).epsilon(1e-8));

  // Maximizer sits at the origin below the departure curve, then migrates.
  CoherentInfoResult low = q1_dephrasure(p, 0.1495, cfg);
  CHECK(std::abs(low.argmax_param) < 1e-4);
  CHECK(low.q1_b == doctest::Approx(0.0110079551475).epsilon(1e-7));
  CoherentInfoResult high = q1_dephrasure(p, 0.151, cfg);
  CHECK(std::abs(std::abs(high.argmax_param) - 0.396680702457) < 2e-3);
  CHECK(high.q1_b == doctest::Approx(0.00931655042764).epsilon(1e-7));

  // Past the positivity boundary g the direct side is dead.
  for (double lambda : {0.205, 0.25, 0.35}) {
    CoherentInfoResult dead = q1_dephrasure(p, lambda, cfg);
    CHECK(dead.q1_b < 1e-8);
  }
}

TEST_CASE("phase-damping axis optimum matches a dense plane search") {
  const double p = 0.25, lambda = 0.17;
  OptimizerConfig cfg;
  CoherentInfoResult axis = q1_dephrasure(p, lambda, cfg);
  testutil::PlaneMax plane = testutil::grid_max_plane([&](double x, double z) {
    return testutil::deph_flag_bias(p, lambda, x, z);
  });
  CHECK(std::abs(axis.q1_b - plane.value) < 1e-6);
}

TEST_CASE("generic multistart optimizer reproduces closed forms") {
  OptimizerConfig cfg = quick_cfg();

  ChannelPair erasure = erasure_pair(0.3, 2).assembled;
  CoherentInfoResult r = q1_generic(erasure, cfg);
  CHECK(std::abs(r.q1_b - 0.4) < 1e-6);
  CHECK(std::abs(r.q1_c) < 1e-6);
  CHECK(std::abs(entropy_bias(erasure, r.argmax_state) - r.q1_b) < 1e-12);
  CHECK(r.evaluations > 0);
  CHECK(r.seed == cfg.seed);

  ChannelPair noiseless = make_pair(perfect_iso(2));
  CoherentInfoResult id = q1_generic(noiseless, cfg);
  CHECK(std::abs(id.q1_b - 1.0) < 1e-6);
  BlochVector arg = rho_to_bloch(id.argmax_state);
  CHECK(arg.norm() < 1e-3);

  ChannelPair glued = generalized_erasure(amplitude_damping_iso(0.3), 0.1).assembled;
  CoherentInfoResult generic = q1_generic(glued, cfg);
  CoherentInfoResult ax = q1_amplitude_glued(0.3, 0.1, cfg);
  CHECK(std::abs(generic.q1_b - ax.q1_b) < 1e-5);
  CHECK(std::abs(generic.q1_c - ax.q1_c) < 1e-5);
}

TEST_CASE("random states never beat the reported optimum") {
  const double p = 0.25, lambda = 0.2;
  OptimizerConfig cfg;
  CoherentInfoResult r = q1_amplitude_glued(p, lambda, cfg);
  ChannelPair pair = generalized_erasure(amplitude_damping_iso(p), lambda).assembled;
  RandomSource rs(53);
  double best = -1.0;
  for (int i = 0; i < 1000; ++i) {
    best = std::max(best, entropy_bias_fast(pair, rs.density(2)));
  }
  CHECK(best <= r.q1_b + 1e-9);
}

TEST_CASE("axis bias profile of the pure damping channel is unimodal") {
  const double p = 0.25;
  ChannelPair pair = make_pair(amplitude_damping_iso(p));
  std::vector<double> values;
  for (int i = 0; i <= 200; ++i) {
    double z = -1.0 + 2.0 * i / 200.0;
    values.push_back(entropy_bias_fast(pair, bloch_to_rho({0.0, 0.0, z})));
  }
  int sign_changes = 0;
  int prev = 0;
  for (size_t i = 1; i < values.size(); ++i) {
    double d = values[i] - values[i - 1];
    if (std::abs(d) < 1e-14) continue;
    int sign = d > 0.0 ? 1 : -1;
    if (prev != 0 && sign != prev) ++sign_changes;
    prev = sign;
  }
  CHECK(sign_changes <= 1);
}

TEST_CASE("positivity boundary scan brackets the closed-form curve") {
  OptimizerConfig cfg;
  for (double p : {0.0, 0.25, 0.4}) {
    double found = boundary_scan_lambda0(p, cfg);
    CHECK(std::abs(found - lambda0(p)) < 0.01);
  }
}

TEST_CASE("processing the output can only lower the bias") {
  // Concatenating a second flagged stage after the first never raises the
  // optimal bias (the second stage is a further degradation of B).
  OptimizerConfig cfg = quick_cfg();
  ChannelPair one = erasure_pair(0.2, 2).assembled;
  ChannelPair two = concatenate(
      one, make_pair(glue_direct_sum({dephasing_iso(0.1), perfect_iso(1)})));
  CoherentInfoResult before = q1_generic(one, cfg);
  CoherentInfoResult after = q1_generic(two, cfg);
  CHECK(after.q1_b <= before.q1_b + 1e-9);

  ChannelPair damp_once = make_pair(amplitude_damping_iso(0.1));
  ChannelPair damp_twice = concatenate(damp_once, make_pair(amplitude_damping_iso(0.15)));
  CoherentInfoResult d1 = q1_generic(damp_once, cfg);
  CoherentInfoResult d2 = q1_generic(damp_twice, cfg);
  CHECK(d2.q1_b <= d1.q1_b + 1e-9);
}
