#pragma once

#include "covmap.hpp"

namespace qcov {

enum class BellKind { psi_minus, psi_plus, phi_plus, phi_minus };

/// (|ij> -/+ |ji>)/sqrt(2) for psi, (|ii> +/- |jj>)/sqrt(2) for phi.
/// Requires 1 <= i < j <= N.
Vector bell_state(BellKind kind, int i, int j, int n);

/// Parameter point of the optimal universal cloner:
/// 2 alpha m_11 = (N+2)/[N(N+1)], beta m_11 = 1/(2N+2), C = 0, m_11 = N.
MapParams cloning_params(int n);

/// P11 |11><11| + (1-P11)/(N-1) sum_j |psi_1j+><psi_1j+|, P11 = 2/(N+1).
Matrix cloning_output(int n);

/// Parameter point of the optimal universal entangler:
/// alpha = beta = 0, C = -1/[N(N-1)]. Sits on the region boundary.
MapParams entangling_params(int n);

/// Uniform mixture of all N(N-1)/2 antisymmetric Bell states; equals the
/// normalized projector onto the antisymmetric subspace.
Matrix entangled_output(int n);

/// ln(N(N-1)/2), the entropy of entangled_output (natural-log units).
double optimal_entropy(int n);

}  // namespace qcov
