#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "qchan/erasure.hpp"
#include "qchan/qubit.hpp"

namespace qchan {

struct OptimizerConfig {
  int coarse_grid_points = 2001;   // uniform points of the 1-D coarse pass
  double refine_tol = 1e-12;       // golden-section bracket width target
  int multistart_count = 32;       // random starts of the generic optimizer
  std::uint64_t seed = 20250822;   // recorded in results
  double pos_threshold = 1e-10;    // bits; smaller magnitudes count as zero
};

struct CoherentInfoResult {
  double q1_b = 0.0;
  double q1_c = 0.0;
  Matrix argmax_state, argmin_state;
  double argmax_param = 0.0, argmin_param = 0.0;  // scan coordinate when 1-D
  std::int64_t evaluations = 0;
  std::string method;
  std::uint64_t seed = 0;
};

// 1-D maximization over [lo, hi]: uniform coarse grid plus geometric ladders
// hugging both endpoints (to resolve extrema exponentially close to the
// boundary), then golden-section refinement of the best bracket.
struct Scan1DResult {
  double best_x = 0.0;
  double best_f = 0.0;
  std::int64_t evaluations = 0;
};
Scan1DResult maximize_scalar(const std::function<double(double)>& f, double lo,
                             double hi, const OptimizerConfig& cfg);

// Entropy bias without the per-call density validation; rho must already be a
// state.  Shared by every optimizer loop.
double entropy_bias_fast(const ChannelPair& pair, const Matrix& rho);

// Axis scan for the glued amplitude-damping channel: extrema over
// rho(0, 0, z), z in [-1, 1].
CoherentInfoResult q1_amplitude_glued(double p, double lambda,
                                      const OptimizerConfig& cfg);

// Axis scans for the glued dephasing channel: maximum over rho(0, 0, z),
// minimum over rho(x, 0, 0), exploiting the model's reflection symmetries.
CoherentInfoResult q1_dephrasure(double p, double lambda,
                                 const OptimizerConfig& cfg);

// Derivative-free multistart ascent/descent over the full state space via
// rho = M M^dag / Tr(M M^dag).
CoherentInfoResult q1_generic(const ChannelPair& pair, const OptimizerConfig& cfg);

// Bisection for the lambda above which the glued amplitude channel stops
// showing positive coherent information (detector threshold pos_threshold).
double boundary_scan_lambda0(double p, const OptimizerConfig& cfg);

}  // namespace qchan
