#pragma once

#include "qchan/coherent_info.hpp"

namespace qchan {

// Two-qubit input families used as two-copy lower-bound ansatz states.
enum class AnsatzFamily {
  sigma_eps,        // (1-eps)[00] + eps [Phi], |Phi> = (|01>+|10>)/sqrt(2)
  tau_product,      // rho(0,0,z) (x) rho(0,0,z)
  repetition_eta,   // eta [00] + (1-eta) [11]
  zeta_mix          // {(1+zeta)([00]+[11]) + (1-zeta)([01]+[10])}/4
};

// Parameter domain of a family: [0,1] for sigma/repetition, [-1,1] otherwise.
std::pair<double, double> ansatz_domain(AnsatzFamily family);
Matrix ansatz_state(AnsatzFamily family, double param);

// Pair of B (x) B with output factors regrouped as (b, b) and (c, c).
// Rejects output factors larger than 36 per side.
ChannelPair two_copy_pair(const ChannelPair& single);

struct NonAddResult {
  double delta2 = 0.0;                  // bound/2 - q1_single
  double best_ansatz_param = 0.0;
  double q1_single = 0.0;
  double q1_two_copy_lower_bound = 0.0; // max bias over the ansatz family
  bool ansatz_improves = false;         // bound exceeds the product-state value
  std::int64_t evaluations = 0;
};

// Two-copy gap of the glued amplitude channel under the entangled
// sigma_eps family.
NonAddResult delta2_amplitude(double p, double lambda, const OptimizerConfig& cfg);

// Two-copy gap of the glued dephasing channel; family may be zeta_mix
// (default) or repetition_eta.
NonAddResult delta2_star_dephrasure(double p, double lambda,
                                    const OptimizerConfig& cfg,
                                    AnsatzFamily family = AnsatzFamily::zeta_mix);

// Lower edge of the lambda window with positive two-copy gap for the glued
// amplitude channel; returns lambda0(p) when no window is detected.
double boundary_scan_lambda1(double p, const OptimizerConfig& cfg);

// Same scan for the glued dephasing channel under its discrete families;
// returns g_curve(p) when no window is detected.
double boundary_scan_lambda1_dephrasure(double p, const OptimizerConfig& cfg);

// Per-copy lower bound on Q1 of n glued amplitude copies from pairing copies
// under the sigma_eps family: even n reuse the two-copy bound, odd n add one
// single-copy letter.  Requires n >= 2.
double pair_ansatz_bound(int n, double p, double lambda, const OptimizerConfig& cfg);

}  // namespace qchan
