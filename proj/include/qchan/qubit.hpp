#pragma once

#include "qchan/channels.hpp"

namespace qchan {

struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;
  double norm() const;
};

// rho = (I + r . sigma)/2; rejects |r| > 1 beyond tolerance.
Matrix bloch_to_rho(const BlochVector& r);
BlochVector rho_to_bloch(const Matrix& rho);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

// Damping toward |0>: J|0> = |0>_b |1>_c, J|1> = sqrt(1-p)|1>_b |1>_c + sqrt(p)|0>_b |0>_c.
Isometry amplitude_damping_iso(double p);

// J|k> = |k>_b |phi_k>_c with |phi_0/1> = sqrt(1-p)|+> +/- sqrt(p)|->;
// channel is B(A) = (1-p) A + p Z A Z.
Isometry dephasing_iso(double p);

// Closed-form Bloch images of the two inner channels and their complements.
BlochVector amplitude_bloch_b(double p, const BlochVector& r);
BlochVector amplitude_bloch_c(double p, const BlochVector& r);
BlochVector dephasing_bloch_b(double p, const BlochVector& r);
BlochVector dephasing_bloch_c(double p, const BlochVector& r);

// Positivity boundary of the glued amplitude-damping channel: (1-2p)/(2-2p).
double lambda0(double p);

// Dephasing-glued curve where the axis maximizer leaves the origin.
double j_curve(double p);

// Dephasing-glued positivity boundary (1-2p)^2 / (1 + (1-2p)^2).
double g_curve(double p);

enum class InnerKind { amplitude, dephasing };

// Whether the glued channel lies in the antidegradable parameter region.
bool antidegradable_region(InnerKind kind, double p, double lambda);

}  // namespace qchan
