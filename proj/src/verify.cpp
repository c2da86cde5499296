#include "verify.hpp"

#include <algorithm>
#include <random>

namespace qcov {

Matrix random_pure_bloch(int n, std::uint64_t seed) {
  Matrix u = haar_unitary(n, seed);
  Matrix rho = u.col(0) * u.col(0).adjoint();
  return bloch_decompose(rho);
}

std::vector<std::string> suite_names() {
  return {"covariance", "linearity",  "marginals", "spectrum",
          "permutation", "generators", "roundtrip"};
}

namespace {

SuiteResult covariance_suite(int n, int trials, std::uint64_t seed) {
  SuiteResult res{"covariance", false, trials, 0.0, 1e-10};
  const Matrix m0 = canonical_bloch(n);
  const MapParams points[2] = {cloning_params(n), entangling_params(n)};
  for (int t = 0; t < trials; ++t) {
    Matrix u = haar_unitary(n, seed + std::uint64_t(t));
    Matrix r = bloch_rotation(u);
    Matrix m1 = apply_rotation(r, m0);
    Matrix uu = kronecker(u, u);
    for (const auto& p : points) {
      Matrix lhs = apply_map(p, m1);
      Matrix rhs = uu * apply_map(p, m0) * uu.adjoint();
      res.max_dev = std::max(res.max_dev, trace_distance(lhs, rhs));
    }
  }
  res.pass = res.max_dev < res.tolerance;
  return res;
}

SuiteResult linearity_suite(int n, int trials, std::uint64_t seed) {
  SuiteResult res{"linearity", false, trials, 0.0, 1e-12};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const MapParams points[2] = {cloning_params(n),
                               MapParams{n, 0.013, -0.021, 0.007}};
  for (int t = 0; t < trials; ++t) {
    Matrix m1 = random_pure_bloch(n, rng());
    Matrix m2 = random_pure_bloch(n, rng());
    double prob = unif(rng);
    for (const auto& p : points)
      res.max_dev = std::max(res.max_dev, verify_linearity(p, m1, m2, prob));
  }
  res.pass = res.max_dev < res.tolerance;
  return res;
}

SuiteResult marginals_suite(int n, int trials, std::uint64_t seed) {
  SuiteResult res{"marginals", false, trials, 0.0, 1e-12};
  const Matrix id_n = Matrix::Identity(n, n) / double(n);
  const MapParams p = entangling_params(n);
  auto check = [&](const Matrix& rho) {
    for (int which = 1; which <= 2; ++which) {
      Matrix marg = partial_trace(rho, which);
      res.max_dev = std::max(res.max_dev, (marg - id_n).cwiseAbs().maxCoeff());
    }
  };
  check(entangled_output(n));
  for (int t = 0; t < trials; ++t)
    check(apply_map(p, random_pure_bloch(n, seed + std::uint64_t(t))));
  res.pass = res.max_dev < res.tolerance;
  return res;
}

SuiteResult spectrum_suite(int n, int trials, std::uint64_t seed) {
  SuiteResult res{"spectrum", false, trials, 0.0, 1e-10};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-0.2, 0.2);
  const Matrix m = canonical_bloch(n);
  for (int t = 0; t < trials; ++t) {
    MapParams p{n, unif(rng) / n, unif(rng) / n, unif(rng)};
    auto predicted = canonical_spectrum(canonical_coefficients(p), p.c);
    Eigen::SelfAdjointEigenSolver<Matrix> es(apply_map(p, m),
                                             Eigen::EigenvaluesOnly);
    for (std::size_t k = 0; k < predicted.size(); ++k)
      res.max_dev = std::max(
          res.max_dev, std::abs(predicted[k] - es.eigenvalues()(Eigen::Index(k))));
  }
  res.pass = res.max_dev < res.tolerance;
  return res;
}

SuiteResult permutation_suite(int n, int trials, std::uint64_t seed) {
  SuiteResult res{"permutation", false, trials, 0.0, 1e-12};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-0.2, 0.2);
  const Matrix swap = swap_operator(n);
  for (int t = 0; t < trials; ++t) {
    MapParams p{n, unif(rng) / n, unif(rng) / n, unif(rng)};
    Matrix rho = apply_map(p, random_pure_bloch(n, rng()));
    res.max_dev = std::max(
        res.max_dev, (swap * rho * swap - rho).cwiseAbs().maxCoeff());
  }
  res.pass = res.max_dev < res.tolerance;
  return res;
}

SuiteResult generators_suite(int n, int trials, std::uint64_t /*seed*/) {
  SuiteResult res{"generators", false, trials, 0.0, 1e-12};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Matrix a = generator(i, j, n);
      res.max_dev = std::max(res.max_dev, std::abs(a.trace()));
      res.max_dev = std::max(
          res.max_dev,
          (a.adjoint() - generator(j, i, n)).cwiseAbs().maxCoeff());
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          double expected = (k == i && j == l ? 1.0 : 0.0) -
                            (i == j && k == l ? 1.0 / n : 0.0);
          res.max_dev = std::max(res.max_dev,
                                 std::abs(a(k - 1, l - 1) - expected));
        }
    }
  if (n == 2) {
    Matrix sz(2, 2), sxpy(2, 2), sxmy(2, 2);
    sz << 1, 0, 0, -1;
    sxpy << 0, 2, 0, 0;  // sigma_x + i sigma_y
    sxmy << 0, 0, 2, 0;  // sigma_x - i sigma_y
    res.max_dev = std::max(
        res.max_dev, (2.0 * generator(1, 1, 2) - sz).cwiseAbs().maxCoeff());
    res.max_dev = std::max(
        res.max_dev, (2.0 * generator(1, 2, 2) - sxpy).cwiseAbs().maxCoeff());
    res.max_dev = std::max(
        res.max_dev, (2.0 * generator(2, 1, 2) - sxmy).cwiseAbs().maxCoeff());
  }
  res.pass = res.max_dev < res.tolerance;
  return res;
}

SuiteResult roundtrip_suite(int n, int trials, std::uint64_t seed) {
  SuiteResult res{"roundtrip", false, trials, 0.0, 1e-12};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    // random mixture of pure states
    Matrix u1 = haar_unitary(n, rng());
    Matrix u2 = haar_unitary(n, rng());
    double w = unif(rng);
    Matrix rho = w * u1.col(0) * u1.col(0).adjoint() +
                 (1.0 - w) * u2.col(0) * u2.col(0).adjoint();
    Matrix back = bloch_compose(bloch_decompose(rho));
    res.max_dev = std::max(res.max_dev, (back - rho).cwiseAbs().maxCoeff());
  }
  res.pass = res.max_dev < res.tolerance;
  return res;
}

}  // namespace

SuiteResult run_suite(const std::string& name, int n, int trials,
                      std::uint64_t seed) {
  if (n < 2) throw DimensionError("run_suite: dimension must be >= 2");
  if (trials < 1) throw ValidationError("run_suite: trials must be >= 1");
  if (name == "covariance") return covariance_suite(n, trials, seed);
  if (name == "linearity") return linearity_suite(n, trials, seed);
  if (name == "marginals") return marginals_suite(n, trials, seed);
  if (name == "spectrum") return spectrum_suite(n, trials, seed);
  if (name == "permutation") return permutation_suite(n, trials, seed);
  if (name == "generators") return generators_suite(n, trials, seed);
  if (name == "roundtrip") return roundtrip_suite(n, trials, seed);
  throw ValidationError("run_suite: unknown suite '" + name + "'");
}

}  // namespace qcov
