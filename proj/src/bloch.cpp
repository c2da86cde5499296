#include "bloch.hpp"

#include <cmath>
#include <random>

namespace qcov {

Matrix generator(int i, int j, int n) {
  if (n < 2) throw DimensionError("generator: dimension must be >= 2");
  if (i < 1 || i > n || j < 1 || j > n)
    throw IndexError("generator: index out of range");
  Matrix a = Matrix::Zero(n, n);
  a(i - 1, j - 1) += 1.0;
  if (i == j) {
    for (int k = 0; k < n; ++k) a(k, k) -= 1.0 / n;
  }
  return a;
}

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void validate_density_matrix(const Matrix& rho, double eig_tol) {
  if (rho.rows() != rho.cols())
    throw ValidationError("density matrix must be square");
  if (!is_hermitian(rho))
    throw ValidationError("density matrix must be Hermitian");
  if (std::abs(rho.trace() - complexd(1.0, 0.0)) > 1e-12)
    throw NotAStateError("density matrix must have unit trace");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -eig_tol)
    throw NotAStateError("density matrix has a negative eigenvalue");
}

Matrix bloch_decompose(const Matrix& rho) {
  if (rho.rows() != rho.cols())
    throw ValidationError("bloch_decompose: input must be square");
  if (rho.rows() < 2)
    throw DimensionError("bloch_decompose: dimension must be >= 2");
  if (!is_hermitian(rho))
    throw ValidationError("bloch_decompose: input must be Hermitian");
  return double(rho.rows()) * rho;
}

Matrix bloch_compose(const Matrix& m) {
  if (m.rows() != m.cols())
    throw ValidationError("bloch_compose: m must be square");
  const int n = int(m.rows());
  if (n < 2) throw DimensionError("bloch_compose: dimension must be >= 2");
  if (!is_hermitian(m))
    throw ValidationError("bloch_compose: m must satisfy m_ij = conj(m_ji)");
  // sum m_ij A_ij = m - tr(m)/N * 1
  const complexd tr = m.trace();
  Matrix rho = m;
  rho.diagonal().array() += 1.0 - tr / double(n);
  return rho / double(n);
}

bool compose_is_physical(const Matrix& rho, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

Matrix canonical_bloch(int n) {
  if (n < 2) throw DimensionError("canonical_bloch: dimension must be >= 2");
  Matrix m = Matrix::Zero(n, n);
  m(0, 0) = double(n);
  return m;
}

double purity_residual(const Matrix& m) {
  if (m.rows() != m.cols())
    throw ValidationError("purity_residual: m must be square");
  if (!is_hermitian(m))
    throw ValidationError("purity_residual: m must be Hermitian");
  const double n = double(m.rows());
  const double mm = (m * m).trace().real();
  const double tr = m.trace().real();
  return mm - tr * tr / n - n * n * (1.0 - 1.0 / n);
}

Matrix haar_unitary(int n, std::uint64_t seed) {
  if (n < 2) throw DimensionError("haar_unitary: dimension must be >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = complexd(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases so the distribution is Haar, not QR-biased.
  for (int k = 0; k < n; ++k) {
    complexd d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return q;
}

Matrix bloch_rotation(const Matrix& u) {
  if (u.rows() != u.cols())
    throw ValidationError("bloch_rotation: input must be square");
  const int n = int(u.rows());
  if (n < 2) throw DimensionError("bloch_rotation: dimension must be >= 2");
  if ((u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-8)
    throw ValidationError("bloch_rotation: input is not unitary");
  Matrix r(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          r(i * n + j, k * n + l) = u(i, k) * std::conj(u(j, l));
  return r;
}

Matrix apply_rotation(const Matrix& r, const Matrix& m) {
  const int n = int(m.rows());
  if (r.rows() != n * n || r.cols() != n * n)
    throw DimensionError("apply_rotation: rotation/coefficient size mismatch");
  Vector vm(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) vm(i * n + j) = m(i, j);
  Vector vo = r * vm;
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = vo(i * n + j);
  return out;
}

}  // namespace qcov
