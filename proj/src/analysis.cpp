#include "analysis.hpp"

#include <algorithm>
#include <cmath>

namespace qcov {

namespace {

int two_party_dim(const Matrix& rho) {
  if (rho.rows() != rho.cols())
    throw ValidationError("two-party state must be square");
  const int d = int(rho.rows());
  const int n = int(std::lround(std::sqrt(double(d))));
  if (n < 2 || n * n != d)
    throw ValidationError("two-party state dimension must be a perfect square");
  return n;
}

}  // namespace

double von_neumann_entropy(const Matrix& rho) {
  if (rho.rows() != rho.cols() || !is_hermitian(rho, 1e-10))
    throw ValidationError("von_neumann_entropy: input must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    double lam = es.eigenvalues()(k);
    if (lam < -1e-8)
      throw NotAStateError("von_neumann_entropy: eigenvalue below -1e-8");
    if (lam < 0.0) lam = 0.0;
    if (lam > 0.0) s -= lam * std::log(lam);
  }
  return s;
}

Matrix partial_trace(const Matrix& rho, int which) {
  const int n = two_party_dim(rho);
  if (which != 1 && which != 2)
    throw ValidationError("partial_trace: factor must be 1 or 2");
  Matrix out = Matrix::Zero(n, n);
  if (which == 1) {
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i) out(j, l) += rho(i * n + j, i * n + l);
  } else {
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) out(i, k) += rho(i * n + j, k * n + j);
  }
  return out;
}

double partial_transpose_min_eig(const Matrix& rho) {
  const int n = two_party_dim(rho);
  Matrix pt(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          pt(i * n + j, k * n + l) = rho(i * n + l, k * n + j);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pt, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

TwoPartyDecomposition two_party_decompose(const Matrix& rho) {
  const int n = two_party_dim(rho);
  if (!is_hermitian(rho, 1e-10))
    throw ValidationError("two_party_decompose: input must be Hermitian");
  const int d = n * n;
  const Matrix id = Matrix::Identity(n, n);

  TwoPartyDecomposition dec;
  dec.n = n;
  // Marginal parts: Tr_2 rho = 1/N + N alpha1_ij A_ij, with alpha1 in the
  // traceless gauge.
  Matrix s1 = partial_trace(rho, 2);
  Matrix s2 = partial_trace(rho, 1);
  dec.alpha1 = (s1 - id / double(n)) / double(n);
  dec.alpha2 = (s2 - id / double(n)) / double(n);

  // Doubly traceless remainder; its coefficients over E_ij (x) E_rs are
  // direct matrix entries and coincide with the K convention above.
  Matrix rem = rho - Matrix::Identity(d, d) / double(d);
  Matrix a1 = dec.alpha1 - (dec.alpha1.trace() / double(n)) * id;
  Matrix a2 = dec.alpha2 - (dec.alpha2.trace() / double(n)) * id;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        rem(i * n + r, j * n + r) -= a1(i, j);
        rem(r * n + i, r * n + j) -= a2(i, j);
      }

  dec.k.assign(std::size_t(n) * n * n * n, complexd(0.0, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          dec.k[std::size_t(((i * n + j) * n + r) * n + s)] =
              rem(i * n + r, j * n + s);
  return dec;
}

Matrix two_party_compose(const TwoPartyDecomposition& dec) {
  const int n = dec.n;
  const int d = n * n;
  Matrix rho = Matrix::Identity(d, d) / double(d);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Matrix a = generator(i, j, n);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (a(p, q) == complexd(0.0, 0.0)) continue;
          for (int r = 0; r < n; ++r) {
            rho(p * n + r, q * n + r) += dec.alpha1(i - 1, j - 1) * a(p, q);
            rho(r * n + p, r * n + q) += dec.alpha2(i - 1, j - 1) * a(p, q);
          }
        }
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Matrix a = generator(i, j, n);
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
          const complexd coeff = dec.k_at(i - 1, j - 1, r - 1, s - 1);
          if (coeff == complexd(0.0, 0.0)) continue;
          const Matrix b = generator(r, s, n);
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
              if (a(p, q) == complexd(0.0, 0.0)) continue;
              for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                  rho(p * n + u, q * n + v) += coeff * a(p, q) * b(u, v);
            }
        }
    }
  return rho;
}

double epsilon_separation(const Matrix& rho) {
  if (rho.rows() != rho.cols() || !is_hermitian(rho, 1e-10))
    throw ValidationError("epsilon_separation: input must be Hermitian");
  const double d = double(rho.rows());
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  double lam = es.eigenvalues().minCoeff();
  if (lam < -1e-8)
    throw NotAStateError("epsilon_separation: eigenvalue below -1e-8");
  if (lam < 0.0) lam = 0.0;
  double eps = 1.0 - d * lam;
  return std::min(1.0, std::max(0.0, eps));
}

MinimizerResult entropy_minimizer(int n, int resolution) {
  if (n < 2) throw DimensionError("entropy_minimizer: dimension must be >= 2");
  if (resolution < 50)
    throw ValidationError("entropy_minimizer: resolution must be >= 50");
  const double w = 2.0 / (double(n) * (n - 1));
  const double step = 2.0 * w / resolution;
  const Matrix m = canonical_bloch(n);

  MinimizerResult best;
  best.n = n;
  best.resolution = resolution;
  bool have = false;
  // y ascending outer, x ascending inner: ties resolve to the
  // lexicographically smallest (C, beta m_11)
  for (int iy = 0; iy <= resolution; ++iy) {
    const double y = -w + iy * step;
    for (int ix = 0; ix <= resolution; ++ix) {
      const double x = -w + ix * step;
      MapParams p{n, 0.0, x / n, y};
      const auto flags = positivity_flags(canonical_coefficients(p), y);
      if (!flags.physical()) continue;
      const double s = von_neumann_entropy(apply_map(p, m));
      if (!have || s < best.entropy) {
        have = true;
        best.beta_m11 = x;
        best.c = y;
        best.entropy = s;
        best.margin = flags.margin;
      }
    }
  }
  if (!have)
    throw ValidationError("entropy_minimizer: no physical point in window");
  return best;
}

double trace_distance(const Matrix& a, const Matrix& b) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace qcov
