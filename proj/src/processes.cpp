#include "processes.hpp"

#include <cmath>

namespace qcov {

Vector bell_state(BellKind kind, int i, int j, int n) {
  if (n < 2) throw DimensionError("bell_state: dimension must be >= 2");
  if (i < 1 || j < 1 || i > n || j > n)
    throw IndexError("bell_state: index out of range");
  if (i >= j) throw IndexError("bell_state: requires i < j");
  const double s = 1.0 / std::sqrt(2.0);
  Vector v = Vector::Zero(n * n);
  const int a = i - 1, b = j - 1;
  switch (kind) {
    case BellKind::psi_minus:
      v(a * n + b) = s;
      v(b * n + a) = -s;
      break;
    case BellKind::psi_plus:
      v(a * n + b) = s;
      v(b * n + a) = s;
      break;
    case BellKind::phi_plus:
      v(a * n + a) = s;
      v(b * n + b) = s;
      break;
    case BellKind::phi_minus:
      v(a * n + a) = s;
      v(b * n + b) = -s;
      break;
  }
  return v;
}

MapParams cloning_params(int n) {
  if (n < 2) throw DimensionError("cloning_params: dimension must be >= 2");
  const double nd = n;
  // products from the optimality point, divided through by m_11 = N
  return MapParams{n, (nd + 2.0) / (2.0 * nd * nd * (nd + 1.0)),
                   1.0 / (2.0 * nd * (nd + 1.0)), 0.0};
}

Matrix cloning_output(int n) {
  if (n < 2) throw DimensionError("cloning_output: dimension must be >= 2");
  const double p11 = 2.0 / (n + 1.0);
  Matrix rho = Matrix::Zero(n * n, n * n);
  rho(0, 0) = p11;
  const double w = (1.0 - p11) / (n - 1);
  for (int j = 2; j <= n; ++j) {
    Vector psi = bell_state(BellKind::psi_plus, 1, j, n);
    rho += w * psi * psi.adjoint();
  }
  return rho;
}

MapParams entangling_params(int n) {
  if (n < 2) throw DimensionError("entangling_params: dimension must be >= 2");
  return MapParams{n, 0.0, 0.0, -1.0 / (double(n) * (n - 1))};
}

Matrix entangled_output(int n) {
  if (n < 2) throw DimensionError("entangled_output: dimension must be >= 2");
  const double w = 2.0 / (double(n) * (n - 1));
  Matrix rho = Matrix::Zero(n * n, n * n);
  // each |psi_ij-><psi_ij-| touches only four entries
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int p = i * n + j, q = j * n + i;
      rho(p, p) += 0.5 * w;
      rho(q, q) += 0.5 * w;
      rho(p, q) -= 0.5 * w;
      rho(q, p) -= 0.5 * w;
    }
  return rho;
}

double optimal_entropy(int n) {
  if (n < 2) throw DimensionError("optimal_entropy: dimension must be >= 2");
  return std::log(double(n) * (n - 1) / 2.0);
}

}  // namespace qcov
