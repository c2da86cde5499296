#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "errors.hpp"

namespace qcov {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using complexd = std::complex<double>;

// Tolerances used throughout: algebraic identities vs spectral quantities.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kSpectralTol = 1e-10;

/// su(N) generator A_ij with entries (A_ij)_kl = d_ki d_jl - d_ij d_kl / N.
/// Indices are 1-based at this interface.
Matrix generator(int i, int j, int n);

bool is_hermitian(const Matrix& a, double tol = kAlgebraTol);

/// Throws NotAStateError / ValidationError unless rho is Hermitian,
/// unit-trace and PSD down to -eig_tol.
void validate_density_matrix(const Matrix& rho, double eig_tol = 1e-10);

/// Bloch coefficients m of rho = (1/N)(1 + m_ij A_ij).
///
/// The diagonal of m is not unique (the A_ii sum to zero); the convention
/// here is m_ij = N rho_ij, i.e. sum_i m_ii = N for states. This is the
/// gauge in which the canonical pure input |1><1| has m_ij = N d_i1 d_j1,
/// and the one the map family expects on its input side.
Matrix bloch_decompose(const Matrix& rho);

/// (1/N)(1 + m_ij A_ij). Positivity is not enforced; region scans feed
/// non-physical m on purpose. Use compose_is_physical to check.
Matrix bloch_compose(const Matrix& m);

bool compose_is_physical(const Matrix& rho, double tol = 1e-10);

/// m_ij = N d_i1 d_j1, the pure input |1><1|.
Matrix canonical_bloch(int n);

/// m_ij m_ji - (sum_i m_ii)^2 / N - N^2 (1 - 1/N); zero iff m encodes a
/// pure state. Invariant under the diagonal gauge shift m -> m + c 1.
double purity_residual(const Matrix& m);

/// Haar-distributed U(N) unitary, deterministic in the seed.
/// QR of a complex Ginibre matrix with the R-diagonal phases folded into Q.
Matrix haar_unitary(int n, std::uint64_t seed);

/// The N^2 x N^2 matrix R with bloch_decompose(U rho U+) = R vec(m),
/// acting on the row-major flattening of m. Concretely R_(ij),(kl) =
/// U_ik conj(U_jl), i.e. m -> U m U+.
Matrix bloch_rotation(const Matrix& u);

/// Apply a bloch_rotation matrix to an N x N coefficient array.
Matrix apply_rotation(const Matrix& r, const Matrix& m);

}  // namespace qcov
