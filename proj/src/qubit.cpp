#include "qchan/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace qchan {

namespace {
constexpr Complex kI{0.0, 1.0};

void check_probability(double p, const char* who) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument(std::string(who) + ": probability must lie in [0, 1]");
}
}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

Matrix bloch_to_rho(const BlochVector& r) {
  if (r.norm() > 1.0 + tol::sum)
    throw std::invalid_argument("bloch_to_rho: vector lies outside the unit ball");
  Matrix rho(2, 2);
  rho(0, 0) = 0.5 * (1.0 + r.z);
  rho(1, 1) = 0.5 * (1.0 - r.z);
  rho(0, 1) = 0.5 * (r.x - kI * r.y);
  rho(1, 0) = 0.5 * (r.x + kI * r.y);
  return rho;
}

BlochVector rho_to_bloch(const Matrix& rho) {
  validate_density(rho);
  if (rho.rows() != 2)
    throw std::invalid_argument("rho_to_bloch: expected a qubit state");
  return {2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(),
          (rho(0, 0) - rho(1, 1)).real()};
}

Matrix pauli_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

Matrix pauli_y() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = -kI;
  m(1, 0) = kI;
  return m;
}

Matrix pauli_z() {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = -1.0;
  return m;
}

Isometry amplitude_damping_iso(double p) {
  check_probability(p, "amplitude_damping_iso");
  Matrix j = Matrix::Zero(4, 2);
  j(1, 0) = 1.0;                 // |0>_b |1>_c
  j(3, 1) = std::sqrt(1.0 - p);  // |1>_b |1>_c
  j(0, 1) = std::sqrt(p);        // |0>_b |0>_c
  return Isometry(std::move(j), 2, 2);
}

Isometry dephasing_iso(double p) {
  check_probability(p, "dephasing_iso");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double cp = (std::sqrt(1.0 - p) + std::sqrt(p)) * inv_sqrt2;
  const double cm = (std::sqrt(1.0 - p) - std::sqrt(p)) * inv_sqrt2;
  Matrix j = Matrix::Zero(4, 2);
  j(0, 0) = cp;  // |0>_b <0|phi_0> etc.
  j(1, 0) = cm;
  j(2, 1) = cm;
  j(3, 1) = cp;
  return Isometry(std::move(j), 2, 2);
}

BlochVector amplitude_bloch_b(double p, const BlochVector& r) {
  const double s = std::sqrt(1.0 - p);
  return {s * r.x, s * r.y, (1.0 - p) * r.z + p};
}

BlochVector amplitude_bloch_c(double p, const BlochVector& r) {
  const double s = std::sqrt(p);
  return {s * r.x, -s * r.y, p - p * r.z - 1.0};
}

BlochVector dephasing_bloch_b(double p, const BlochVector& r) {
  const double f = 1.0 - 2.0 * p;
  return {f * r.x, f * r.y, r.z};
}

BlochVector dephasing_bloch_c(double p, const BlochVector& r) {
  return {1.0 - 2.0 * p, 0.0, 2.0 * std::sqrt(p * (1.0 - p)) * r.z};
}

double lambda0(double p) {
  if (p < 0.0 || p >= 1.0)
    throw std::invalid_argument("lambda0: requires p in [0, 1)");
  return (1.0 - 2.0 * p) / (2.0 - 2.0 * p);
}

double j_curve(double p) {
  if (p <= 0.0 || p >= 0.5)
    throw std::invalid_argument("j_curve: requires p in (0, 1/2)");
  const double t = 2.0 * p * (1.0 - p) * std::log((1.0 - p) / p);
  return (1.0 - 2.0 * p - t) / (2.0 - 4.0 * p - t);
}

double g_curve(double p) {
  if (p < 0.0 || p > 0.5)
    throw std::invalid_argument("g_curve: requires p in [0, 1/2]");
  const double s = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
  return s / (1.0 + s);
}

bool antidegradable_region(InnerKind kind, double p, double lambda) {
  check_probability(p, "antidegradable_region");
  check_probability(lambda, "antidegradable_region");
  if (kind == InnerKind::amplitude) {
    if (p >= 1.0 - tol::sum) return lambda >= 0.0;
    return lambda >= lambda0(p);
  }
  return lambda >= 0.5;
}

}  // namespace qchan
