#pragma once

namespace coalsim {

/// Upper-tail probability of the standard normal, Q(x) = P[Z > x].
double q_func(double x);

/// Inverse of q_func on (0, 1). Throws std::domain_error outside (0, 1).
double q_inv(double p);

}  // namespace coalsim
