#include "qchan/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace qchan {

namespace {
constexpr double kLn2 = 0.69314718055994530942;
}

double AsymptoticModel::eval(double eps) const {
  if (eps <= 0.0) return 0.0;
  return alpha * eps * std::log(eps) + beta * eps;
}

TemplateExtremum extremum(const AsymptoticModel& model) {
  if (model.alpha == 0.0)
    throw std::invalid_argument("extremum: template has no interior extremum");
  TemplateExtremum e;
  e.eps_m = std::exp(-(1.0 + model.beta / model.alpha));
  e.f_m = -model.alpha * e.eps_m;
  return e;
}

double ad_alpha(double p, double lambda) {
  return (p * (1.0 - lambda) + lambda - 0.5) / kLn2;
}

Q1BCoefficients q1b_coefficients(InnerKind kind, double p) {
  Q1BCoefficients c;
  if (kind == InnerKind::amplitude) {
    c.alpha1 = -(1.0 - p) / kLn2;
    c.beta0 = (p * std::log(p) / (1.0 - p) - std::log(1.0 - p)) / (4.0 * kLn2);
    c.beta1 = (1.0 - p) * (2.0 * c.beta0 + 1.0 + 1.0 / kLn2);
  } else {
    const double s = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
    const double q = 2.0 * p * (1.0 - p);
    c.alpha1 = -(1.0 + s) / (2.0 * kLn2);
    c.beta0 = q * std::log(2.0 * q) / ((1.0 + s) * kLn2);
    c.beta1 = (1.0 + kLn2 - q * (1.0 - std::log(q))) / kLn2;
  }
  return c;
}

AsymptoticModel q1b_model(InnerKind kind, double p, double delta_lambda) {
  const Q1BCoefficients c = q1b_coefficients(kind, p);
  return {c.alpha1 * delta_lambda, c.beta0 + c.beta1 * delta_lambda};
}

double q1b_a(InnerKind kind, double p) {
  const Q1BCoefficients c = q1b_coefficients(kind, p);
  return -c.alpha1 * std::exp(-1.0 - c.beta1 / c.alpha1);
}

double q1b_b(InnerKind kind, double p) {
  const Q1BCoefficients c = q1b_coefficients(kind, p);
  return c.beta0 / c.alpha1;
}

double q1B_asymptote(InnerKind kind, double p, double delta_lambda) {
  if (delta_lambda <= 0.0) return 0.0;
  return q1b_a(kind, p) * delta_lambda * std::exp(-q1b_b(kind, p) / delta_lambda);
}

AsymptoticModel q1c_model(InnerKind kind, double p, double lambda) {
  if (p <= 0.0)
    throw std::invalid_argument("q1c_model: requires p > 0 (logarithm singular)");
  if (lambda <= 0.0)
    throw std::invalid_argument("q1c_model: requires lambda > 0");
  const double alpha = lambda / (2.0 * kLn2);
  const double beta0 = -alpha * (1.0 + kLn2);
  const double beta1 = -alpha * (1.0 - lambda) / lambda;
  const double beta2 = kind == InnerKind::amplitude ? 0.0 : -2.0 * beta1;
  const double beta3 = beta1;
  const double lp = std::log(p);
  return {alpha, beta0 + beta1 * lp + beta2 * p * lp + beta3 * p};
}

double q1C_asymptote(InnerKind kind, double p, double lambda) {
  if (p < 0.0) throw std::invalid_argument("q1C_asymptote: requires p >= 0");
  if (p == 0.0) return 0.0;  // erasure limit for lambda <= 1/2
  const double weight =
      kind == InnerKind::amplitude ? p + std::log(p)
                                   : p + (1.0 - 2.0 * p) * std::log(p);
  return lambda / kLn2 * std::exp(weight * (1.0 - lambda) / lambda);
}

Delta2Coefficients delta2_coefficients(double p) {
  const double q = 1.0 - p;
  const double lp = std::log(p);
  const double lq = std::log(q);
  const double l1p = std::log1p(p);
  Delta2Coefficients c;
  c.bbar0 = (-2.0 * kLn2 * p + 4.0 * kLn2 * p * p + p * lp +
             (1.0 - p * (1.0 + 2.0 * p)) * l1p - 2.0 * q * q * lq) /
            (4.0 * kLn2 * q * q);
  c.bbar1 = (2.0 * (1.0 - 2.0 * p) + 2.0 * p * p * (1.0 + kLn2) + p * lp -
             q * q * lq - p * (1.0 + p) * l1p) /
            (q * kLn2);
  c.bbar2 = (p * std::log(4.0 * p) - (1.0 + p) * l1p) / kLn2;
  return c;
}

AsymptoticModel delta2_model(double p, double delta_lambda) {
  const Q1BCoefficients b = q1b_coefficients(InnerKind::amplitude, p);
  const Delta2Coefficients c = delta2_coefficients(p);
  return {2.0 * b.alpha1 * delta_lambda,
          c.bbar0 + c.bbar1 * delta_lambda + c.bbar2 * delta_lambda * delta_lambda};
}

double delta2_abar(double p) {
  const double alpha1 = q1b_coefficients(InnerKind::amplitude, p).alpha1;
  const double bbar1 = delta2_coefficients(p).bbar1;
  return -2.0 * alpha1 * std::exp(-1.0 - bbar1 / (2.0 * alpha1));
}

double delta2_bbar(double p) {
  return delta2_coefficients(p).bbar0 /
         (2.0 * q1b_coefficients(InnerKind::amplitude, p).alpha1);
}

double delta2_asymptote(double p, double delta_lambda) {
  if (delta_lambda <= 0.0) return 0.0;
  return delta2_abar(p) * delta_lambda * std::exp(-delta2_bbar(p) / delta_lambda);
}

double delta2_peak_ratio(double p, double delta_lambda) {
  const AsymptoticModel single = q1b_model(InnerKind::amplitude, p, delta_lambda);
  const AsymptoticModel twice = delta2_model(p, delta_lambda);
  return std::exp(single.beta / single.alpha *
                  (1.0 - twice.beta / (2.0 * single.beta)));
}

bool delta2_window_condition(double p) {
  return delta2_coefficients(p).bbar0 /
             (2.0 * q1b_coefficients(InnerKind::amplitude, p).beta0) <
         1.0;
}

}  // namespace qchan
