#include "qchan/verify.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qchan/erasure.hpp"
#include "qchan/gluing.hpp"
#include "qchan/qubit.hpp"
#include "qchan/random.hpp"

namespace qchan {

namespace {

struct Collector {
  std::vector<CheckResult> results;
  int instances = 0;

  void run(const std::string& name, double tolerance,
           const std::function<double(RandomSource&, int)>& body,
           std::uint64_t seed) {
    CheckResult r;
    r.name = name;
    r.tolerance = tolerance;
    r.instances = instances;
    RandomSource rng(seed);
    for (int k = 0; k < instances; ++k)
      r.residual = std::max(r.residual, body(rng, k));
    r.pass = r.residual <= tolerance;
    results.push_back(std::move(r));
  }
};

Index small_dim(RandomSource& rng) {
  return static_cast<Index>(std::floor(rng.uniform(2.0, 4.999)));
}

void check_numkernel(Collector& c, std::uint64_t seed) {
  c.run("kron mixed product", 1e-12,
        [](RandomSource& rng, int) {
          Index d1 = small_dim(rng), d2 = small_dim(rng);
          Matrix a = rng.ginibre(d1, d1), b = rng.ginibre(d2, d2);
          Matrix x = rng.ginibre(d1, d1), y = rng.ginibre(d2, d2);
          return max_abs(kron(a, b) * kron(x, y) - kron(a * x, b * y)) /
                 (1.0 + max_abs(kron(a * x, b * y)));
        },
        seed + 1);
  c.run("partial trace of product operators", 1e-12,
        [](RandomSource& rng, int) {
          Index d1 = small_dim(rng), d2 = small_dim(rng);
          Matrix a = rng.ginibre(d1, d1), b = rng.ginibre(d2, d2);
          Matrix prod = kron(a, b);
          double r1 = max_abs(partial_trace(prod, {d1, d2}, Side::right) -
                              b.trace() * a);
          double r2 = max_abs(partial_trace(prod, {d1, d2}, Side::left) -
                              a.trace() * b);
          return std::max(r1, r2) / (1.0 + max_abs(prod));
        },
        seed + 2);
  c.run("partial trace under factor swap", 1e-12,
        [](RandomSource& rng, int) {
          Index d1 = small_dim(rng), d2 = small_dim(rng);
          Matrix m = rng.ginibre(d1 * d2, d1 * d2);
          Matrix s = factor_permutation({d1, d2}, {1, 0});
          Matrix swapped = s * m * s.adjoint();
          double r1 = max_abs(partial_trace(swapped, {d2, d1}, Side::left) -
                              partial_trace(m, {d1, d2}, Side::right));
          double r2 = max_abs(partial_trace(swapped, {d2, d1}, Side::right) -
                              partial_trace(m, {d1, d2}, Side::left));
          return std::max(r1, r2) / (1.0 + max_abs(m));
        },
        seed + 3);
  c.run("spectrum sums to trace", 1e-10,
        [](RandomSource& rng, int) {
          Index d = small_dim(rng) + 2;
          Matrix h = rng.hermitian(d);
          Spectrum s = hermitian_spectrum(h);
          double sum = 0.0;
          for (double v : s.eigenvalues) sum += v;
          return std::abs(sum - h.trace().real()) / (1.0 + std::abs(sum));
        },
        seed + 4);
  c.run("entropy invariant under unitary conjugation", 1e-9,
        [](RandomSource& rng, int) {
          Index d = small_dim(rng) + 1;
          Matrix rho = rng.density(d);
          Matrix u = rng.unitary(d);
          return std::abs(von_neumann_entropy(u * rho * u.adjoint()) -
                          von_neumann_entropy(rho));
        },
        seed + 5);
  c.run("direct sum embeds blocks in place", 1e-14,
        [](RandomSource& rng, int) {
          Index d1 = small_dim(rng), d2 = small_dim(rng);
          Matrix a = rng.ginibre(d1, d1), b = rng.ginibre(d2, d2);
          Matrix s = direct_sum_embed({a, b});
          double r = max_abs(s.block(0, 0, d1, d1) - a);
          r = std::max(r, max_abs(s.block(d1, d1, d2, d2) - b));
          r = std::max(r, max_abs(s.block(0, d1, d1, d2)));
          return r;
        },
        seed + 6);
}

void check_channels(Collector& c, std::uint64_t seed) {
  c.run("isometry closure", 1e-9,
        [](RandomSource& rng, int) {
          Index db = small_dim(rng), dc = small_dim(rng);
          Index da = std::min<Index>(db * dc, small_dim(rng));
          Isometry j = rng.isometry(da, db, dc);
          return max_abs(j.j.adjoint() * j.j - Matrix::Identity(da, da));
        },
        seed + 1);
  c.run("channel outputs are states", 1e-9,
        [](RandomSource& rng, int) {
          ChannelPair pair = make_pair(rng.isometry(2, 3, 2));
          Matrix rho = rng.density(2);
          Matrix b = pair.apply_b(rho), cc = pair.apply_c(rho);
          double r = std::abs(b.trace().real() - 1.0);
          r = std::max(r, std::abs(cc.trace().real() - 1.0));
          Eigen::SelfAdjointEigenSolver<Matrix> sb(b, Eigen::EigenvaluesOnly);
          Eigen::SelfAdjointEigenSolver<Matrix> sc(cc, Eigen::EigenvaluesOnly);
          r = std::max(r, std::max(0.0, -sb.eigenvalues().minCoeff()));
          r = std::max(r, std::max(0.0, -sc.eigenvalues().minCoeff()));
          return r;
        },
        seed + 2);
  c.run("pure inputs give equal output entropies", 1e-9,
        [](RandomSource& rng, int) {
          ChannelPair pair = make_pair(rng.isometry(3, 3, 3));
          Matrix g = rng.ginibre(3, 1);
          Matrix psi = g * g.adjoint() / (g.adjoint() * g)(0, 0).real();
          return std::abs(entropy_bias(pair, psi));
        },
        seed + 3);
  c.run("output swap exchanges the pair", 1e-10,
        [](RandomSource& rng, int) {
          Isometry j = rng.isometry(2, 3, 2);
          ChannelPair pair = make_pair(j);
          ChannelPair swapped = make_pair(swap_outputs(j));
          Matrix rho = rng.density(2);
          double r = max_abs(swapped.apply_b(rho) - pair.apply_c(rho));
          return std::max(r, std::abs(entropy_bias(swapped, rho) +
                                      entropy_bias(pair, rho)));
        },
        seed + 4);
  c.run("superoperator matches direct application", 1e-11,
        [](RandomSource& rng, int) {
          ChannelPair pair = make_pair(rng.isometry(3, 2, 3));
          Matrix rho = rng.density(3);
          double r = max_abs(pair.b_op.apply(rho) - pair.apply_b(rho));
          return std::max(r, max_abs(pair.c_op.apply(rho) - pair.apply_c(rho)));
        },
        seed + 5);
  c.run("composite complement marginals", 1e-9,
        [](RandomSource& rng, int) {
          ChannelPair p1 = make_pair(rng.isometry(2, 2, 2));
          ChannelPair p2 = make_pair(rng.isometry(2, 2, 3));
          ChannelPair joint = concatenate(p1, p2);
          Matrix rho = rng.density(2);
          Matrix full = joint.apply_c(rho);
          DimSplit split{p1.iso.d_c, p2.iso.d_c};
          double r = max_abs(partial_trace(full, split, Side::left) -
                             p2.apply_c(p1.apply_b(rho)));
          return std::max(r, max_abs(partial_trace(full, split, Side::right) -
                                     p1.apply_c(rho)));
        },
        seed + 6);
  c.run("identity composition preserves the channel", 1e-10,
        [](RandomSource& rng, int) {
          ChannelPair p1 = make_pair(rng.isometry(2, 3, 2));
          ChannelPair ident = make_pair(perfect_iso(3));
          ChannelPair joint = concatenate(p1, ident);
          return max_abs(joint.b_op.action - p1.b_op.action);
        },
        seed + 7);
}

void check_gluing(Collector& c, std::uint64_t seed) {
  c.run("convex gluing mixes the channels", 1e-9,
        [](RandomSource& rng, int) {
          Index da = 2, db = 3;
          Isometry j1 = rng.isometry(da, db, 2);
          Isometry j2 = rng.isometry(da, db, 3);
          double w = rng.uniform(0.1, 0.9);
          ChannelPair glued = make_pair(glue_convex({j1, j2}, {w, 1.0 - w}));
          Matrix rho = rng.density(da);
          Matrix expect = w * make_pair(j1).apply_b(rho) +
                          (1.0 - w) * make_pair(j2).apply_b(rho);
          return max_abs(glued.apply_b(rho) - expect);
        },
        seed + 1);
  c.run("block-diagonal gluing block structure", 1e-9,
        [](RandomSource& rng, int) {
          Index da = 2;
          Isometry j1 = rng.isometry(da, 2, 2);
          Isometry j2 = rng.isometry(da, 3, 2);
          double w = rng.uniform(0.1, 0.9);
          std::vector<double> probs{w, 1.0 - w};
          ChannelPair glued = make_pair(glue_block_diagonal({j1, j2}, probs));
          Matrix rho = rng.density(da);
          Matrix out = glued.apply_b(rho);
          Pdi q = Pdi::blocks({2, 3});
          ChannelPair part[] = {make_pair(j1), make_pair(j2)};
          double r = 0.0;
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
              Matrix piece = q.projectors[a] * out * q.projectors[b];
              if (a == b) {
                Matrix expect = Matrix::Zero(5, 5);
                Index off = a == 0 ? 0 : 2;
                expect.block(off, off, part[a].iso.d_b, part[a].iso.d_b) =
                    probs[a] * part[a].apply_b(rho);
                r = std::max(r, max_abs(piece - expect));
              } else {
                r = std::max(r, max_abs(piece));
              }
            }
          return r;
        },
        seed + 2);
  c.run("block-diagonal entropy and bias decompositions", 1e-9,
        [](RandomSource& rng, int) {
          Index da = 2;
          Isometry j1 = rng.isometry(da, 2, 2);
          Isometry j2 = rng.isometry(da, 2, 3);
          double w = rng.uniform(0.1, 0.9);
          ChannelPair glued = make_pair(glue_block_diagonal({j1, j2}, {w, 1.0 - w}));
          ChannelPair c1 = make_pair(j1), c2 = make_pair(j2);
          Matrix rho = rng.density(da);
          double sb = von_neumann_entropy(glued.apply_b(rho));
          double expect_sb = w * von_neumann_entropy(c1.apply_b(rho)) +
                             (1.0 - w) * von_neumann_entropy(c2.apply_b(rho)) +
                             shannon_entropy({w, 1.0 - w});
          double bias = entropy_bias(glued, rho);
          double expect_bias = w * entropy_bias(c1, rho) +
                               (1.0 - w) * entropy_bias(c2, rho);
          return std::max(std::abs(sb - expect_sb), std::abs(bias - expect_bias));
        },
        seed + 3);
  c.run("direct-sum gluing acts blockwise", 1e-9,
        [](RandomSource& rng, int) {
          Isometry j1 = rng.isometry(2, 2, 2);
          Isometry j2 = rng.isometry(2, 2, 2);
          ChannelPair glued = make_pair(glue_direct_sum({j1, j2}));
          Matrix rho = rng.density(4);
          Matrix out = glued.apply_b(rho);
          Matrix expect = Matrix::Zero(4, 4);
          Matrix block0 = rho.block(0, 0, 2, 2), block1 = rho.block(2, 2, 2, 2);
          expect.block(0, 0, 2, 2) = make_pair(j1).apply_b(block0);
          expect.block(2, 2, 2, 2) = make_pair(j2).apply_b(block1);
          return max_abs(out - expect);
        },
        seed + 4);
  c.run("input-and-complement gluing sums block responses", 1e-9,
        [](RandomSource& rng, int) {
          Index db = 3;
          Isometry j1 = rng.isometry(2, db, 2);
          Isometry j2 = rng.isometry(2, db, 3);
          ChannelPair glued = make_pair(glue_input_and_complement({j1, j2}));
          Matrix rho = rng.density(4);
          Matrix expect = make_pair(j1).apply_b(rho.block(0, 0, 2, 2)) +
                          make_pair(j2).apply_b(rho.block(2, 2, 2, 2));
          return max_abs(glued.apply_b(rho) - expect);
        },
        seed + 5);
  c.run("subchannel equals projected application", 1e-10,
        [](RandomSource& rng, int) {
          ChannelPair pair = make_pair(rng.isometry(4, 3, 3));
          Pdi p = Pdi::blocks({2, 2});
          SubchannelMaps maps = subchannel(pair, p, 1);
          Matrix a = rng.density(4);
          Matrix proj = p.projectors[1] * a * p.projectors[1];
          double r = max_abs(maps.b.apply(a) - pair.apply_b(proj));
          return std::max(r, max_abs(maps.c.apply(a) - pair.apply_c(proj)));
        },
        seed + 6);
  c.run("slices reassemble the isometry", 1e-9,
        [](RandomSource& rng, int) {
          Index da = 2;
          Isometry j1 = rng.isometry(da, 2, 2);
          Isometry j2 = rng.isometry(da, 3, 2);
          double w = rng.uniform(0.2, 0.8);
          Isometry glued = glue_block_diagonal({j1, j2}, {w, 1.0 - w});
          Pdi p = Pdi::blocks({da});
          Pdi q = Pdi::blocks({2, 3});
          Pdi r = Pdi::blocks({2, 2});
          Matrix sum = Matrix::Zero(glued.j.rows(), glued.j.cols());
          for (size_t kq = 0; kq < 2; ++kq)
            for (size_t lr = 0; lr < 2; ++lr)
              sum += slice(glued.j, p, q, r, 0, kq, lr);
          return max_abs(sum - glued.j);
        },
        seed + 7);
  c.run("diagonal slices are proportional to input projectors", 1e-9,
        [](RandomSource& rng, int) {
          Index da = 3;
          Isometry j1 = rng.isometry(da, 2, 2);
          Isometry j2 = rng.isometry(da, 2, 3);
          double w = rng.uniform(0.2, 0.8);
          Isometry glued = glue_block_diagonal({j1, j2}, {w, 1.0 - w});
          Pdi p = Pdi::blocks({da});
          Pdi q = Pdi::blocks({2, 2});
          Pdi r = Pdi::blocks({2, 3});
          double worst = 0.0;
          for (size_t k = 0; k < 2; ++k) {
            Matrix piece = slice(glued.j, p, q, r, 0, k, k);
            worst = std::max(worst,
                             slice_proportionality_residual(piece, p.projectors[0]));
          }
          return worst;
        },
        seed + 8);
}

void check_erasure(Collector& c, std::uint64_t seed) {
  c.run("erasure channel block form", 1e-10,
        [](RandomSource& rng, int) {
          Index d = small_dim(rng);
          double lambda = rng.uniform(0.0, 1.0);
          GeneralizedErasure e = erasure_pair(lambda, d);
          Matrix rho = rng.density(d);
          Matrix b = e.assembled.apply_b(rho);
          Matrix cc = e.assembled.apply_c(rho);
          double r = max_abs(b.block(0, 0, d, d) - (1.0 - lambda) * rho);
          r = std::max(r, std::abs(b(d, d).real() - lambda));
          r = std::max(r, max_abs(b.block(0, d, d, 1)));
          r = std::max(r, std::abs(cc(0, 0).real() - (1.0 - lambda)));
          r = std::max(r, max_abs(cc.block(1, 1, d, d) - lambda * rho));
          return r;
        },
        seed + 1);
  c.run("complement equals the reflected erasure channel", 1e-10,
        [](RandomSource& rng, int) {
          Index d = small_dim(rng);
          double lambda = rng.uniform(0.0, 1.0);
          GeneralizedErasure e = erasure_pair(lambda, d);
          GeneralizedErasure mirrored = erasure_pair(1.0 - lambda, d);
          // move the flag from the first slot to the last
          Matrix perm = Matrix::Zero(d + 1, d + 1);
          perm(d, 0) = 1.0;
          for (Index k = 0; k < d; ++k) perm(k, k + 1) = 1.0;
          Superoperator relabel = Superoperator::from_function(
              d + 1, d + 1, [&](const Matrix& a) { return perm * a * perm.adjoint(); });
          Superoperator moved = relabel.compose(e.assembled.c_op);
          return max_abs(moved.action - mirrored.assembled.b_op.action);
        },
        seed + 2);
  c.run("flagged degrading map sends channel to complement", 1e-9,
        [](RandomSource& rng, int) {
          Index d = small_dim(rng);
          double lambda = rng.uniform(0.0, 0.45);
          GeneralizedErasure e = erasure_pair(lambda, d);
          return verify_degrading(e.assembled, flagged_erasure_degrader(lambda, d),
                                  DegradeDirection::b_to_c);
        },
        seed + 3);
  c.run("glued channel block form for generic inner parts", 1e-9,
        [](RandomSource& rng, int) {
          Isometry inner = rng.isometry(2, 3, 2);
          double lambda = rng.uniform(0.0, 1.0);
          GeneralizedErasure g = generalized_erasure(inner, lambda);
          ChannelPair base = make_pair(inner);
          Matrix rho = rng.density(2);
          Matrix b = g.assembled.apply_b(rho);
          Matrix cc = g.assembled.apply_c(rho);
          double r = max_abs(b.block(0, 0, 3, 3) - (1.0 - lambda) * base.apply_b(rho));
          r = std::max(r, std::abs(b(3, 3).real() - lambda));
          r = std::max(r, max_abs(cc.block(0, 0, 2, 2) - (1.0 - lambda) * base.apply_c(rho)));
          r = std::max(r, max_abs(cc.block(2, 2, 2, 2) - lambda * rho));
          r = std::max(r, max_abs(cc.block(0, 2, 2, 2)));
          return r;
        },
        seed + 4);
  c.run("glued channel as erasure after the inner channel", 1e-9,
        [](RandomSource& rng, int) {
          Isometry inner = rng.isometry(2, 2, 3);
          double lambda = rng.uniform(0.0, 1.0);
          GeneralizedErasure g = generalized_erasure(inner, lambda);
          ChannelPair outer = concatenate(make_pair(inner),
                                          erasure_pair(lambda, inner.d_b).assembled);
          return max_abs(g.assembled.b_op.action - outer.b_op.action);
        },
        seed + 5);
  c.run("glued channel as extended inner after erasure", 1e-9,
        [](RandomSource& rng, int) {
          Isometry inner = rng.isometry(2, 3, 2);
          double lambda = rng.uniform(0.0, 1.0);
          GeneralizedErasure g = generalized_erasure(inner, lambda);
          Superoperator erase_first = erasure_pair(lambda, 2).assembled.b_op;
          Superoperator extended =
              make_pair(glue_direct_sum({inner, perfect_iso(1)})).b_op;
          return max_abs(g.assembled.b_op.action -
                         extended.compose(erase_first).action);
        },
        seed + 6);
}

void check_qubit(Collector& c, std::uint64_t seed) {
  auto random_bloch = [](RandomSource& rng) {
    while (true) {
      BlochVector r{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                    rng.uniform(-1.0, 1.0)};
      if (r.norm() <= 1.0) return r;
    }
  };
  c.run("damping channel matches its vector action", 1e-10,
        [&](RandomSource& rng, int) {
          double p = rng.uniform(0.0, 1.0);
          ChannelPair pair = make_pair(amplitude_damping_iso(p));
          BlochVector r = random_bloch(rng);
          Matrix rho = bloch_to_rho(r);
          double res = max_abs(pair.apply_b(rho) - bloch_to_rho(amplitude_bloch_b(p, r)));
          return std::max(res, max_abs(pair.apply_c(rho) -
                                       bloch_to_rho(amplitude_bloch_c(p, r))));
        },
        seed + 1);
  c.run("phase channel matches its vector action", 1e-10,
        [&](RandomSource& rng, int) {
          double p = rng.uniform(0.0, 1.0);
          ChannelPair pair = make_pair(dephasing_iso(p));
          BlochVector r = random_bloch(rng);
          Matrix rho = bloch_to_rho(r);
          double res = max_abs(pair.apply_b(rho) - bloch_to_rho(dephasing_bloch_b(p, r)));
          res = std::max(res, max_abs(pair.apply_b(rho) -
                                      (p * pauli_z() * rho * pauli_z() + (1.0 - p) * rho)));
          return std::max(res, max_abs(pair.apply_c(rho) -
                                       bloch_to_rho(dephasing_bloch_c(p, r))));
        },
        seed + 2);
  c.run("glued damping bias is rotation invariant", 1e-10,
        [&](RandomSource& rng, int) {
          double p = rng.uniform(0.0, 1.0);
          double lambda = rng.uniform(0.0, 1.0);
          ChannelPair pair = generalized_erasure(amplitude_damping_iso(p), lambda).assembled;
          BlochVector r = random_bloch(rng);
          double axial = std::sqrt(r.x * r.x + r.y * r.y);
          return std::abs(entropy_bias(pair, bloch_to_rho(r)) -
                          entropy_bias(pair, bloch_to_rho({axial, 0.0, r.z})));
        },
        seed + 3);
  c.run("glued phase bias is reflection invariant", 1e-10,
        [&](RandomSource& rng, int) {
          double p = rng.uniform(0.0, 0.5);
          double lambda = rng.uniform(0.0, 1.0);
          ChannelPair pair = generalized_erasure(dephasing_iso(p), lambda).assembled;
          BlochVector r = random_bloch(rng);
          return std::abs(entropy_bias(pair, bloch_to_rho(r)) -
                          entropy_bias(pair, bloch_to_rho({r.x, r.y, -r.z})));
        },
        seed + 4);
  c.run("damping degrading map in closed form", 1e-9,
        [&](RandomSource& rng, int) {
          double p = rng.uniform(0.02, 0.48);
          ChannelPair pair = make_pair(amplitude_damping_iso(p));
          double q = (1.0 - 2.0 * p) / (1.0 - p);
          Superoperator damp = make_pair(amplitude_damping_iso(q)).b_op;
          Matrix x = pauli_x();
          Superoperator flip = Superoperator::from_function(
              2, 2, [&](const Matrix& a) { return x * a * x; });
          return verify_degrading(pair, flip.compose(damp), DegradeDirection::b_to_c);
        },
        seed + 5);
  c.run("boundary curves decrease", 0.0,
        [](RandomSource&, int k) {
          double worst = 0.0;
          for (double p = 0.02; p < 0.45; p += 0.01) {
            worst = std::max(worst, lambda0(p + 0.01) - lambda0(p));
            worst = std::max(worst, j_curve(p + 0.01) - j_curve(p));
            worst = std::max(worst, g_curve(p + 0.01) - g_curve(p));
          }
          (void)k;
          return std::max(worst, 0.0);
        },
        seed + 6);
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"numkernel", "channels", "gluing",
                                                 "erasure", "qubit_models"};
  return names;
}

std::vector<CheckResult> verify_suite(const std::string& suite, std::uint64_t seed,
                                      int instances) {
  Collector c;
  c.instances = instances;
  if (suite == "numkernel")
    check_numkernel(c, seed);
  else if (suite == "channels")
    check_channels(c, seed);
  else if (suite == "gluing")
    check_gluing(c, seed);
  else if (suite == "erasure")
    check_erasure(c, seed);
  else if (suite == "qubit_models")
    check_qubit(c, seed);
  else
    throw std::invalid_argument("verify_suite: unknown suite '" + suite + "'");
  return c.results;
}

}  // namespace qchan
