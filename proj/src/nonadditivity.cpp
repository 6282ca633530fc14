#include "qchan/nonadditivity.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace qchan {

std::pair<double, double> ansatz_domain(AnsatzFamily family) {
  switch (family) {
    case AnsatzFamily::sigma_eps:
    case AnsatzFamily::repetition_eta:
      return {0.0, 1.0};
    case AnsatzFamily::tau_product:
    case AnsatzFamily::zeta_mix:
      return {-1.0, 1.0};
  }
  throw std::invalid_argument("ansatz_domain: unknown family");
}

Matrix ansatz_state(AnsatzFamily family, double param) {
  auto [lo, hi] = ansatz_domain(family);
  if (param < lo - tol::sum || param > hi + tol::sum)
    throw std::invalid_argument("ansatz_state: parameter outside family domain");
  param = std::clamp(param, lo, hi);
  Matrix rho = Matrix::Zero(4, 4);
  switch (family) {
    case AnsatzFamily::sigma_eps:
      rho(0, 0) = 1.0 - param;
      rho(1, 1) = rho(2, 2) = rho(1, 2) = rho(2, 1) = 0.5 * param;
      break;
    case AnsatzFamily::tau_product: {
      Matrix one = bloch_to_rho({0.0, 0.0, param});
      rho = kron(one, one);
      break;
    }
    case AnsatzFamily::repetition_eta:
      rho(0, 0) = param;
      rho(3, 3) = 1.0 - param;
      break;
    case AnsatzFamily::zeta_mix:
      rho(0, 0) = rho(3, 3) = 0.25 * (1.0 + param);
      rho(1, 1) = rho(2, 2) = 0.25 * (1.0 - param);
      break;
  }
  return rho;
}

ChannelPair two_copy_pair(const ChannelPair& single) {
  const Index db = single.iso.d_b, dc = single.iso.d_c;
  if (db * db > 36 || dc * dc > 36)
    throw std::invalid_argument("two_copy_pair: output factor dimension too large");
  Matrix joint = kron(single.iso.j, single.iso.j);
  // (b1, c1, b2, c2) -> (b1, b2, c1, c2)
  Matrix perm = factor_permutation({db, dc, db, dc}, {0, 2, 1, 3});
  return make_pair(Isometry(perm * joint, db * db, dc * dc));
}

namespace {

struct FamilyScan {
  double best_param = 0.0;
  double best_bias = 0.0;
  std::int64_t evaluations = 0;
};

FamilyScan scan_family(const ChannelPair& two, AnsatzFamily family,
                       const OptimizerConfig& cfg) {
  auto [lo, hi] = ansatz_domain(family);
  Scan1DResult scan = maximize_scalar(
      [&](double t) { return entropy_bias_fast(two, ansatz_state(family, t)); },
      lo, hi, cfg);
  return {scan.best_x, scan.best_f, scan.evaluations};
}

NonAddResult assemble(double q1_single, const FamilyScan& scan,
                      std::int64_t extra_evals, const OptimizerConfig& cfg) {
  NonAddResult res;
  res.q1_single = q1_single;
  res.q1_two_copy_lower_bound = scan.best_bias;
  res.best_ansatz_param = scan.best_param;
  res.delta2 = 0.5 * scan.best_bias - q1_single;
  res.ansatz_improves = res.delta2 > cfg.pos_threshold;
  res.evaluations = scan.evaluations + extra_evals;
  return res;
}

}  // namespace

NonAddResult delta2_amplitude(double p, double lambda, const OptimizerConfig& cfg) {
  const ChannelPair pair =
      generalized_erasure(amplitude_damping_iso(p), lambda).assembled;
  const ChannelPair two = two_copy_pair(pair);
  const CoherentInfoResult single = q1_amplitude_glued(p, lambda, cfg);
  const FamilyScan scan = scan_family(two, AnsatzFamily::sigma_eps, cfg);
  return assemble(single.q1_b, scan, single.evaluations, cfg);
}

NonAddResult delta2_star_dephrasure(double p, double lambda,
                                    const OptimizerConfig& cfg,
                                    AnsatzFamily family) {
  if (family != AnsatzFamily::zeta_mix && family != AnsatzFamily::repetition_eta)
    throw std::invalid_argument(
        "delta2_star_dephrasure: family must be zeta_mix or repetition_eta");
  const ChannelPair pair = generalized_erasure(dephasing_iso(p), lambda).assembled;
  const ChannelPair two = two_copy_pair(pair);
  const CoherentInfoResult single = q1_dephrasure(p, lambda, cfg);
  const FamilyScan scan = scan_family(two, family, cfg);
  return assemble(single.q1_b, scan, single.evaluations, cfg);
}

namespace {

// Walk delta-lambda outward from `top` until the predicate turns positive,
// keep walking until it turns back off, then bisect the lower window edge.
// Returns `top` when no window is detected.
double window_lower_edge(double top, const std::function<bool(double)>& positive) {
  const double probes[] = {0.0025, 0.005, 0.0075, 0.01, 0.015, 0.02, 0.03,
                           0.04,   0.05,  0.065,  0.08, 0.1,   0.125, 0.15};
  double inside = -1.0, outside = 0.0;  // inside window / below its lower edge
  for (double dl : probes) {
    const double lambda = top - dl;
    if (lambda <= 0.0) break;
    if (positive(lambda)) {
      inside = lambda;
    } else if (inside >= 0.0) {
      outside = lambda;
      break;
    }
  }
  if (inside < 0.0) return top;  // no window detected
  double lo = std::max(outside, 0.0), hi = inside;
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    (positive(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double boundary_scan_lambda1(double p, const OptimizerConfig& cfg) {
  if (p <= 0.0 || p >= 0.5)
    throw std::invalid_argument("boundary_scan_lambda1: requires p in (0, 1/2)");
  return window_lower_edge(lambda0(p), [&](double lambda) {
    return delta2_amplitude(p, lambda, cfg).delta2 > cfg.pos_threshold;
  });
}

double boundary_scan_lambda1_dephrasure(double p, const OptimizerConfig& cfg) {
  if (p <= 0.0 || p >= 0.5)
    throw std::invalid_argument(
        "boundary_scan_lambda1_dephrasure: requires p in (0, 1/2)");
  return window_lower_edge(g_curve(p), [&](double lambda) {
    const double zeta =
        delta2_star_dephrasure(p, lambda, cfg, AnsatzFamily::zeta_mix).delta2;
    if (zeta > cfg.pos_threshold) return true;
    return delta2_star_dephrasure(p, lambda, cfg, AnsatzFamily::repetition_eta)
               .delta2 > cfg.pos_threshold;
  });
}

double pair_ansatz_bound(int n, double p, double lambda,
                         const OptimizerConfig& cfg) {
  if (n < 2) throw std::invalid_argument("pair_ansatz_bound: requires n >= 2");
  const NonAddResult two = delta2_amplitude(p, lambda, cfg);
  const double per_pair = 0.5 * two.q1_two_copy_lower_bound;
  if (n % 2 == 0) return per_pair;
  return ((n - 1) * per_pair + two.q1_single) / n;
}

}  // namespace qchan
