#pragma once

#include <vector>

#include "covmap.hpp"

namespace qcov {

/// Coefficients of a two-party state over the generator basis:
///   rho = 1(x)1/N^2 + alpha1_ij A_ij(x)1 + alpha2_ij 1(x)A_ij
///         + K_ijrs A_ij(x)A_rs.
/// Convention: alpha1, alpha2 traceless and sum_i K_iirs = sum_r K_ijrr = 0
/// (the diagonal gauge directions carry no information).
struct TwoPartyDecomposition {
  int n = 0;
  Matrix alpha1;
  Matrix alpha2;
  std::vector<complexd> k;  // n^4 entries, row-major over (i, j, r, s)

  complexd k_at(int i, int j, int r, int s) const {
    const int nn = n;
    return k[std::size_t(((i * nn + j) * nn + r) * nn + s)];
  }
};

/// -sum lambda ln lambda with 0 ln 0 := 0. Eigenvalues in [-1e-10, 0) are
/// clamped to zero; anything below -1e-8 is a hard error.
double von_neumann_entropy(const Matrix& rho);

/// Trace over factor `which` (1 or 2) of an N^2-dimensional state.
Matrix partial_trace(const Matrix& rho, int which);

/// Minimum eigenvalue after transposing the second factor's indices.
double partial_transpose_min_eig(const Matrix& rho);

TwoPartyDecomposition two_party_decompose(const Matrix& rho);

/// Rebuild the state from a decomposition (reconstruction check).
Matrix two_party_compose(const TwoPartyDecomposition& dec);

/// Minimal eps such that (rho - (1-eps) 1/d)/eps is a state:
/// clip(1 - d * lambda_min, 0, 1), lambda_min clamped at 0 from tiny
/// negatives.
double epsilon_separation(const Matrix& rho);

struct MinimizerResult {
  int n = 0;
  int resolution = 0;
  double beta_m11 = 0.0;
  double c = 0.0;
  double entropy = 0.0;
  double margin = 0.0;
};

/// Brute-force minimization of the output entropy over the alpha = 0 slice
/// of the physical region, on the canonical input. The window is
/// [-w, w]^2 with w = 2/[N(N-1)] so the known optimum is a lattice point;
/// resolution counts grid cells per axis. Independent oracle for
/// entangling_params.
MinimizerResult entropy_minimizer(int n, int resolution);

/// 0.5 * ||a - b||_1 for Hermitian a, b.
double trace_distance(const Matrix& a, const Matrix& b);

}  // namespace qcov
