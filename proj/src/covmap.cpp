#include "covmap.hpp"

#include <algorithm>
#include <cmath>

namespace qcov {

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

void check_params(const MapParams& p) {
  if (p.n < 2) throw DimensionError("map params: dimension must be >= 2");
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.c))
    throw ValidationError("map params: parameters must be finite");
}

}  // namespace

Matrix swap_operator(int n) {
  Matrix s = Matrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i * n + j, j * n + i) = 1.0;
  return s;
}

Matrix apply_map(const MapParams& p, const Matrix& m) {
  check_params(p);
  const int n = p.n;
  if (m.rows() != n || m.cols() != n)
    throw ValidationError("apply_map: dimension mismatch between params and m");
  if (!is_hermitian(m, 1e-10))
    throw ValidationError("apply_map: m must be Hermitian");

  const int d = n * n;
  const Matrix id = Matrix::Identity(n, n);
  const Matrix id2 = Matrix::Identity(d, d);
  const complexd tr = m.trace();

  Matrix out = id2 / double(d);

  // alpha term: m_ij A_ij = m - tr(m)/N * 1
  Matrix ma = m - (tr / double(n)) * id;
  out += p.alpha * (kronecker(ma, id) + kronecker(id, ma));

  // scalar term: sum_ij A_ij (x) A_ji = SWAP - 1(x)1/N
  out += p.c * (swap_operator(n) - id2 / double(n));

  // vector term: sum m_il A_ij (x) A_jl
  //   = G - (m(x)1 + 1(x)m)/N + tr(m) 1(x)1/N^2,  G_(ij),(jl) = m_il
  Matrix g = Matrix::Zero(d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) g(i * n + j, j * n + l) += m(i, l);
  Matrix t = g - (kronecker(m, id) + kronecker(id, m)) / double(n) +
             (tr / double(d)) * id2;
  out += p.beta * (t + t.adjoint());
  return out;
}

CanonicalCoefficients canonical_coefficients(const MapParams& p) {
  check_params(p);
  const double n = double(p.n);
  const double am = p.alpha * n;  // alpha m_11 with m_11 = N
  const double bm = p.beta * n;   // beta m_11
  CanonicalCoefficients co;
  co.n = p.n;
  co.m23 = 1.0 / (n * n) - 2.0 * am / n - p.c / n + 2.0 * bm / (n * n);
  co.m12 = co.m23 + am - 2.0 * bm / n;
  co.m11 = 1.0 / (n * n) + 2.0 * am * (1.0 - 1.0 / n) + p.c * (1.0 - 1.0 / n) +
           2.0 * bm * (1.0 - 1.0 / n) * (1.0 - 1.0 / n);
  co.cross = p.c + bm;
  return co;
}

PositivityFlags positivity_flags(const CanonicalCoefficients& co, double c) {
  PositivityFlags f;
  const double s1 = co.m23 - std::abs(c);
  const double s2 = co.m12 - std::abs(co.cross);
  const double s3 = co.m23 + c;
  const double s4 = co.m11;
  f.m23_ge_abs_c = s1 >= -1e-12;
  f.m12_ge_abs_cross = s2 >= -1e-12;
  f.m23_plus_c_ge_0 = s3 >= -1e-12;
  f.m11_ge_0 = s4 >= -1e-12;
  f.margin = std::min(std::min(s1, s2), std::min(s3, s4));
  return f;
}

std::vector<double> canonical_spectrum(const CanonicalCoefficients& co,
                                       double c) {
  const int n = co.n;
  std::vector<double> eigs;
  eigs.reserve(n * n);
  eigs.push_back(co.m11);
  for (int j = 2; j <= n; ++j) {
    eigs.push_back(co.m23 + c);
    eigs.push_back(co.m12 + co.cross);
    eigs.push_back(co.m12 - co.cross);
  }
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      eigs.push_back(co.m23 + c);
      eigs.push_back(co.m23 - c);
    }
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

RegionScan region_scan(int n, double alpha, double x_min, double x_max,
                       double y_min, double y_max, int resolution) {
  if (n < 2) throw DimensionError("region_scan: dimension must be >= 2");
  if (resolution < 2) throw ValidationError("region_scan: resolution must be >= 2");
  if (!(x_min < x_max) || !(y_min < y_max))
    throw ValidationError("region_scan: empty or inverted range");

  RegionScan scan;
  scan.n = n;
  scan.alpha = alpha;
  scan.resolution = resolution;
  scan.grid.resize(std::size_t(resolution) * resolution);

  const Matrix m = canonical_bloch(n);
  const double dx = (x_max - x_min) / (resolution - 1);
  const double dy = (y_max - y_min) / (resolution - 1);

  for (int iy = 0; iy < resolution; ++iy) {
    const double y = y_min + iy * dy;
    for (int ix = 0; ix < resolution; ++ix) {
      const double x = x_min + ix * dx;
      MapParams p{n, alpha, x / n, y};
      const auto flags = positivity_flags(canonical_coefficients(p), y);

      Eigen::SelfAdjointEigenSolver<Matrix> es(apply_map(p, m),
                                               Eigen::EigenvaluesOnly);
      RegionPoint& pt = scan.grid[std::size_t(iy) * resolution + ix];
      pt.x = x;
      pt.y = y;
      pt.physical = flags.physical();
      pt.margin = flags.margin;
      pt.min_eig = es.eigenvalues().minCoeff();
    }
  }

  // The point where all four constraint families vanish together; for
  // alpha = 0 it sits at (0, -1/(N(N-1))). Reported only when it actually
  // has zero margin under the given alpha and lies inside the window.
  {
    const double bx = 0.0;
    const double by = -1.0 / (double(n) * (n - 1));
    if (bx >= x_min && bx <= x_max && by >= y_min && by <= y_max) {
      MapParams p{n, alpha, bx / n, by};
      const auto co = canonical_coefficients(p);
      const double worst =
          std::max(std::max(std::abs(co.m23 - std::abs(by)),
                            std::abs(co.m12 - std::abs(co.cross))),
                   std::max(std::abs(co.m23 + by), std::abs(co.m11)));
      if (worst <= 1e-12) {
        scan.boundary.found = true;
        scan.boundary.x = bx;
        scan.boundary.y = by;
        scan.boundary.margin = positivity_flags(co, by).margin;
      }
    }
  }
  return scan;
}

double verify_linearity(const MapParams& p, const Matrix& m1, const Matrix& m2,
                        double prob) {
  if (prob < 0.0 || prob > 1.0)
    throw ValidationError("verify_linearity: probability out of [0, 1]");
  Matrix mixed = prob * m1 + (1.0 - prob) * m2;
  Matrix lhs = apply_map(p, mixed);
  Matrix rhs = prob * apply_map(p, m1) + (1.0 - prob) * apply_map(p, m2);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace qcov
