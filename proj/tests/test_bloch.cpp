#include <cmath>
#include <random>

#include "doctest.h"
#include "verify.hpp"

using namespace qcov;

namespace {

Matrix random_mixed(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.1, 0.9);
  Matrix u1 = haar_unitary(n, rng());
  Matrix u2 = haar_unitary(n, rng());
  double w = unif(rng);
  return w * u1.col(0) * u1.col(0).adjoint() +
         (1.0 - w) * u2.col(1) * u2.col(1).adjoint();
}

}  // namespace

TEST_CASE("generator matrices") {
  SUBCASE("A_11 at N=2 is sigma_z/2") {
    Matrix a = generator(1, 1, 2);
    CHECK(std::abs(a(0, 0) - complexd(0.5)) < 1e-15);
    CHECK(std::abs(a(1, 1) - complexd(-0.5)) < 1e-15);
    CHECK(std::abs(a(0, 1)) < 1e-15);
  }

  SUBCASE("A_12 at N=2 has a single unit entry") {
    Matrix a = generator(1, 2, 2);
    CHECK(std::abs(a(0, 1) - complexd(1.0)) < 1e-15);
    CHECK(std::abs(a(0, 0)) < 1e-15);
    CHECK(std::abs(a(1, 0)) < 1e-15);
    CHECK(std::abs(a(1, 1)) < 1e-15);
  }

  SUBCASE("Pauli correspondence at N=2") {
    Matrix sz(2, 2), sx(2, 2), sy(2, 2);
    sz << 1, 0, 0, -1;
    sx << 0, 1, 1, 0;
    sy << 0, complexd(0, -1), complexd(0, 1), 0;
    CHECK((2.0 * generator(1, 1, 2) - sz).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((2.0 * generator(2, 2, 2) + sz).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((2.0 * generator(1, 2, 2) - (sx + complexd(0, 1) * sy))
              .cwiseAbs()
              .maxCoeff() < 1e-15);
    CHECK((2.0 * generator(2, 1, 2) - (sx - complexd(0, 1) * sy))
              .cwiseAbs()
              .maxCoeff() < 1e-15);
  }

  SUBCASE("algebra relations for several N") {
    for (int n : {2, 3, 5}) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          Matrix a = generator(i, j, n);
          CHECK(std::abs(a.trace()) < 1e-12);
          CHECK((a.adjoint() - generator(j, i, n)).cwiseAbs().maxCoeff() <
                1e-15);
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              double expected = (k == i && j == l ? 1.0 : 0.0) -
                                (i == j && k == l ? 1.0 / n : 0.0);
              CHECK(std::abs(a(k - 1, l - 1) - expected) < 1e-15);
            }
        }
    }
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(generator(0, 1, 3), IndexError);
    CHECK_THROWS_AS(generator(1, 4, 3), IndexError);
    CHECK_THROWS_AS(generator(1, 1, 1), DimensionError);
  }
}

TEST_CASE("bloch decompose / compose") {
  SUBCASE("canonical pure input") {
    Matrix rho = Matrix::Zero(3, 3);
    rho(0, 0) = 1.0;
    Matrix m = bloch_decompose(rho);
    CHECK(std::abs(m(0, 0) - complexd(3.0)) < 1e-15);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i || j) CHECK(std::abs(m(i, j)) < 1e-15);
  }

  SUBCASE("maximally mixed state decomposes to the identity gauge") {
    // the m = N rho convention puts the trace in the diagonal; this still
    // composes back to 1/N (the diagonal gauge direction is invisible)
    Matrix rho = Matrix::Identity(4, 4) / 4.0;
    Matrix m = bloch_decompose(rho);
    CHECK((m - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((bloch_compose(m) - rho).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((bloch_compose(Matrix::Zero(4, 4)) - rho).cwiseAbs().maxCoeff() <
          1e-15);
  }

  SUBCASE("compose of the canonical vector") {
    Matrix m = canonical_bloch(2);
    Matrix rho = bloch_compose(m);
    Matrix expect(2, 2);
    expect << 1, 0, 0, 0;
    CHECK((rho - expect).cwiseAbs().maxCoeff() < 1e-15);
  }

  SUBCASE("round trip on random mixed states") {
    for (int n : {2, 3, 4, 6}) {
      for (int t = 0; t < 10; ++t) {
        Matrix rho = random_mixed(n, 100 * n + t);
        Matrix back = bloch_compose(bloch_decompose(rho));
        CHECK((back - rho).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(bloch_decompose(Matrix::Zero(2, 3)), ValidationError);
    Matrix nh(2, 2);
    nh << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(bloch_decompose(nh), ValidationError);
    CHECK_THROWS_AS(bloch_compose(nh), ValidationError);
  }

  SUBCASE("non-physical m is accepted but flagged") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 10.0;  // way outside the Bloch body
    Matrix rho = bloch_compose(m);
    CHECK(std::abs(rho.trace() - complexd(1.0)) < 1e-12);
    CHECK_FALSE(compose_is_physical(rho));
  }
}

TEST_CASE("purity residual") {
  SUBCASE("zero for pure, negative definite shift for mixed") {
    for (int n : {2, 3, 5}) {
      for (int t = 0; t < 100; ++t) {
        Matrix m = random_pure_bloch(n, 7000 + 100 * n + t);
        CHECK(std::abs(purity_residual(m)) < 1e-10);
        Matrix rho = random_mixed(n, 9000 + 100 * n + t);
        double res = purity_residual(bloch_decompose(rho));
        double tr2 = (rho * rho).trace().real();
        // residual tracks N^2 (Tr rho^2 - 1)
        CHECK(std::abs(res - n * n * (tr2 - 1.0)) < 1e-10);
        CHECK(res < -1e-6);
      }
    }
  }

  SUBCASE("maximally mixed") {
    for (int n : {2, 3, 4}) {
      double res = purity_residual(Matrix::Zero(n, n));
      CHECK(std::abs(res + double(n) * n * (1.0 - 1.0 / n)) < 1e-12);
    }
  }

  SUBCASE("canonical vector at N=2") {
    CHECK(std::abs(purity_residual(canonical_bloch(2))) < 1e-12);
  }
}

TEST_CASE("haar unitaries") {
  SUBCASE("deterministic in the seed") {
    Matrix a = haar_unitary(4, 42);
    Matrix b = haar_unitary(4, 42);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    Matrix c = haar_unitary(4, 43);
    CHECK((a - c).cwiseAbs().maxCoeff() > 1e-3);
  }

  SUBCASE("unitarity") {
    for (int n : {2, 3, 8}) {
      Matrix u = haar_unitary(n, 5);
      CHECK((u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }

  SUBCASE("first-entry moment matches the Haar value") {
    const int n = 3, samples = 10000;
    double acc = 0.0;
    for (int t = 0; t < samples; ++t)
      acc += std::norm(haar_unitary(n, 50000 + t)(0, 0));
    const double mean = acc / samples;
    // |U_11|^2 ~ Beta(1, N-1): var = (N-1)/(N^2 (N+1))
    const double se = std::sqrt((n - 1.0) / (double(n) * n * (n + 1.0)) /
                                samples);
    CHECK(std::abs(mean - 1.0 / n) < 3.0 * se);
  }
}

TEST_CASE("bloch rotation") {
  SUBCASE("identity unitary") {
    Matrix r = bloch_rotation(Matrix::Identity(3, 3));
    CHECK((r - Matrix::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-15);
  }

  SUBCASE("decompose-rotate equals rotate-decompose") {
    for (int n : {2, 3, 4}) {
      for (int t = 0; t < 20; ++t) {
        Matrix u = haar_unitary(n, 300 + t);
        Matrix rho = random_mixed(n, 400 + t);
        Matrix lhs = bloch_decompose(u * rho * u.adjoint());
        Matrix rhs = apply_rotation(bloch_rotation(u), bloch_decompose(rho));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }

  SUBCASE("diagonal sign flip at N=2") {
    Matrix u(2, 2);
    u << 1, 0, 0, -1;
    Matrix m(2, 2);
    m << 0.5, complexd(0.25, 0.5), complexd(0.25, -0.5), -0.5;
    Matrix out = apply_rotation(bloch_rotation(u), m);
    CHECK(std::abs(out(0, 0) - m(0, 0)) < 1e-15);
    CHECK(std::abs(out(1, 1) - m(1, 1)) < 1e-15);
    CHECK(std::abs(out(0, 1) + m(0, 1)) < 1e-15);
    CHECK(std::abs(out(1, 0) + m(1, 0)) < 1e-15);
  }

  SUBCASE("group homomorphism") {
    for (int t = 0; t < 10; ++t) {
      Matrix u1 = haar_unitary(3, 600 + t);
      Matrix u2 = haar_unitary(3, 700 + t);
      Matrix lhs = bloch_rotation(u2 * u1);
      Matrix rhs = bloch_rotation(u2) * bloch_rotation(u1);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
    }
  }

  SUBCASE("rejects non-unitary input") {
    Matrix bad = 2.0 * Matrix::Identity(2, 2);
    CHECK_THROWS_AS(bloch_rotation(bad), ValidationError);
  }
}
