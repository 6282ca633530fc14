#pragma once

#include "qchan/qubit.hpp"

namespace qchan {

// Small-eps template f(eps) = alpha * eps * ln(eps) + beta * eps, in bits.
struct AsymptoticModel {
  double alpha = 0.0;
  double beta = 0.0;
  double eval(double eps) const;
};

// Interior extremum of the template: eps_m = exp(-(1 + beta/alpha)),
// f(eps_m) = -alpha * eps_m (a maximum when alpha < 0, a minimum when
// alpha > 0).  Rejects alpha = 0.
struct TemplateExtremum {
  double eps_m = 0.0;
  double f_m = 0.0;
};
TemplateExtremum extremum(const AsymptoticModel& model);

// Exact template slope of the glued amplitude channel near the pure state
// z = 1: alpha = [p(1 - lambda) + lambda - 1/2] / ln 2.
double ad_alpha(double p, double lambda);

// Linearized channel-side coefficients: alpha = alpha1 * dl,
// beta = beta0 + beta1 * dl, with dl the distance below the positivity
// boundary (lambda0 for amplitude, g for dephasing).
struct Q1BCoefficients {
  double alpha1 = 0.0, beta0 = 0.0, beta1 = 0.0;
};
Q1BCoefficients q1b_coefficients(InnerKind kind, double p);
AsymptoticModel q1b_model(InnerKind kind, double p, double delta_lambda);

// Peak-value form Q1(B) ~ a(p) dl exp(-b(p)/dl).
double q1b_a(InnerKind kind, double p);
double q1b_b(InnerKind kind, double p);
double q1B_asymptote(InnerKind kind, double p, double delta_lambda);

// Complement-side template at (p, lambda): alpha = lambda / (2 ln 2) and a
// beta series in p whose p log p term is absent for the amplitude kind and
// -2 beta1 for the dephasing kind.
AsymptoticModel q1c_model(InnerKind kind, double p, double lambda);

// Closed-form complement asymptote; returns 0 at p = 0 (erasure limit).
double q1C_asymptote(InnerKind kind, double p, double lambda);

// Two-copy template for the amplitude channel with the entangled ansatz:
// alpha_bar = 2 alpha1 dl, beta_bar = bbar0 + bbar1 dl + bbar2 dl^2.
struct Delta2Coefficients {
  double bbar0 = 0.0, bbar1 = 0.0, bbar2 = 0.0;
};
Delta2Coefficients delta2_coefficients(double p);
AsymptoticModel delta2_model(double p, double delta_lambda);

double delta2_abar(double p);
double delta2_bbar(double p);
double delta2_asymptote(double p, double delta_lambda);

// Ratio of the two-copy to single-copy extremum locations,
// R = exp[(beta/alpha)(1 - beta_bar/(2 beta))].
double delta2_peak_ratio(double p, double delta_lambda);

// Window condition bbar0 / (2 beta0) < 1 required for a nonadditivity window.
bool delta2_window_condition(double p);

}  // namespace qchan
