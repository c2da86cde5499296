#pragma once

#include <vector>

#include "bloch.hpp"

namespace qcov {

/// One member of the covariant two-particle map family. alpha and beta are
/// the raw map parameters; the canonical pure input has m_11 = N, so the
/// products that show up in the coefficient formulas are alpha*N and beta*N.
struct MapParams {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double c = 0.0;
};

/// Coefficients of the output on the canonical input m_ij = N d_i1 d_j1.
struct CanonicalCoefficients {
  int n = 0;
  double m11 = 0.0;
  double m12 = 0.0;
  double m23 = 0.0;
  double cross = 0.0;  // C + beta m_11, the |1j><j1| entry
};

struct PositivityFlags {
  bool m23_ge_abs_c = false;
  bool m12_ge_abs_cross = false;
  bool m23_plus_c_ge_0 = false;
  bool m11_ge_0 = false;
  double margin = 0.0;  // minimum slack over the four constraints

  bool physical() const { return margin >= -1e-12; }
};

struct RegionPoint {
  double x = 0.0;  // beta * m_11
  double y = 0.0;  // C
  bool physical = false;
  double min_eig = 0.0;
  double margin = 0.0;
};

struct BoundaryPoint {
  bool found = false;
  double x = 0.0;
  double y = 0.0;
  double margin = 0.0;
};

struct RegionScan {
  int n = 0;
  double alpha = 0.0;
  int resolution = 0;  // grid points per axis
  std::vector<RegionPoint> grid;  // row-major, y outer, x inner
  BoundaryPoint boundary;
};

/// SWAP exchanging the two tensor factors of C^N (x) C^N.
Matrix swap_operator(int n);

Matrix kronecker(const Matrix& a, const Matrix& b);

/// The two-particle output state of the map family on coefficient array m:
///   1(x)1/N^2 + alpha m_ij (A_ij(x)1 + 1(x)A_ij) + C A_ij(x)A_ji
///   + beta m_il A_ij(x)A_jl + beta m_li A_ji(x)A_lj.
/// Tensor ordering |ij> = |i>(x)|j>, row-major with the first factor slow.
/// Output is Hermitian with unit trace for any Hermitian m; PSD only inside
/// the physical region.
Matrix apply_map(const MapParams& p, const Matrix& m);

/// The explicit output coefficients on the canonical input (m_11 = N).
CanonicalCoefficients canonical_coefficients(const MapParams& p);

PositivityFlags positivity_flags(const CanonicalCoefficients& co, double c);

/// Scan the (x = beta m_11, y = C) plane at fixed alpha. Each grid point
/// carries both the closed-form constraint verdict and the minimum
/// eigenvalue of apply_map on the canonical input. resolution is the number
/// of points per axis, endpoints included. If the all-constraints-zero
/// point lies inside the window it is reported in `boundary`.
RegionScan region_scan(int n, double alpha, double x_min, double x_max,
                       double y_min, double y_max, int resolution);

/// Max-norm of apply(p m1 + (1-p) m2) - [p apply(m1) + (1-p) apply(m2)].
double verify_linearity(const MapParams& p, const Matrix& m1, const Matrix& m2,
                        double prob);

/// Eigenvalues of the canonical-input output predicted by the coefficient
/// block structure: {M11, (M23+C) x (N-1), (M12 +/- cross) x (N-1),
/// (M23 +/- C) x (N-1)(N-2)/2}, ascending.
std::vector<double> canonical_spectrum(const CanonicalCoefficients& co,
                                       double c);

}  // namespace qcov
