#pragma once

#include "qchan/gluing.hpp"

namespace qchan {

// J|psi> = |psi>_b |e>_c : channel is the identity, complement is a constant.
Isometry perfect_iso(Index d);

// J|psi> = |f>_b |psi>_c : channel is a constant, complement is the identity.
Isometry perfect_swap_iso(Index d);

// Erasure pair on a d-dimensional input: B(A) = (1-lambda) A (+) lambda Tr(A) [f]
// with the flag appended after the transmitted block, and the complement
// C(A) = (1-lambda) Tr(A) [e] (+) lambda A with the flag block first.
struct GeneralizedErasure {
  Isometry inner;     // J1 of the inner pair (B1, C1)
  double lambda = 0.0;
  Index d_b1 = 0, d_c1 = 0;
  ChannelPair assembled;
};

// Glue an arbitrary inner pair with a perfect-swap part at weight lambda:
// B_g(A) = (1-lambda) B1(A) (+) lambda Tr(A) [f],
// C_g(A) = (1-lambda) C1(A) (+) lambda A.
GeneralizedErasure generalized_erasure(const Isometry& inner, double lambda);

// Plain erasure pair = generalized erasure with an identity inner channel.
GeneralizedErasure erasure_pair(double lambda, Index d);

// Closed-form coherent information of the erasure pair:
// (max{1-2 lambda, 0} log2 d, max{2 lambda - 1, 0} log2 d).
struct ErasureQ1 {
  double q1_b = 0.0;
  double q1_c = 0.0;
};
ErasureQ1 erasure_q1(double lambda, Index d);

// Degrading map D with D o B = C for the erasure pair at lambda <= 1/2:
// keeps the transmitted block with probability 1 - mu, mu = (1-2 lambda)/(1-lambda),
// sending everything else to the erased flag.
Superoperator flagged_erasure_degrader(double lambda, Index d);

// Composite of a generalized erasure around an inner pair whose complement is
// itself an erasure channel with probability mu: the overall complement is an
// erasure channel with probability epsilon = (1-lambda) mu.
double incomplete_erasure_epsilon(double mu, double lambda);

// True when that composite complement has zero coherent information,
// i.e. lambda <= 1 - 1/(2 mu).
bool zero_capacity_interval(double mu, double lambda);

}  // namespace qchan
