#include <doctest.h>

#include <cmath>
#include <random>

#include "metaspec/symbols.hpp"
#include "support/oracles.hpp"

using namespace metaspec;
using linalg::RealMatrix;
using symbols::LieAlgebraElement;

namespace {

RealMatrix rotation_block() {
  RealMatrix b(2);
  b(0, 1) = 1.0;
  b(1, 0) = -1.0;
  return b;
}

}  // namespace

TEST_CASE("from_blocks: oscillator, angular momentum, diagonal stretch") {
  auto osc = symbols::from_blocks(RealMatrix(2), RealMatrix::identity(2));
  CHECK(osc.frequencies[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(osc.frequencies[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(osc.ground_shift == doctest::Approx(1.0).epsilon(1e-12));

  auto ang = symbols::from_blocks(rotation_block(), RealMatrix(2));
  CHECK(ang.frequencies[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ang.frequencies[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ang.ground_shift == doctest::Approx(0.0).epsilon(1e-12));

  RealMatrix c(2);
  c(0, 0) = 1.0;
  c(1, 1) = 2.0;
  auto stretch = symbols::from_blocks(RealMatrix(2), c);
  // Oracle: eigenvalues of -C by the 2x2 characteristic polynomial.
  CHECK(stretch.frequencies[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(stretch.frequencies[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(stretch.ground_shift == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("from_blocks: eigen-data satisfies A_c v = i s v and the trace identity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 1 + trial % 4;
    auto A = testsupport::random_u_element(d, rng);
    for (std::size_t j = 0; j < d; ++j) {
      auto v = A.eigenbasis.column(j);
      auto av = A.complex_form * v;
      double worst = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        worst = std::max(worst,
                         std::abs(av[i] - linalg::Complex(0.0, A.frequencies[j]) * v[i]));
      CHECK(worst < 1e-8);
    }
    double sum = 0.0;
    for (double s : A.frequencies) sum += s;
    CHECK(std::abs(sum + A.C.trace()) < 1e-8);  // sum s_j = -tr C
    CHECK(std::abs(A.ground_shift + 0.5 * sum) < 1e-12);
  }
}

TEST_CASE("from_blocks: rejects malformed blocks") {
  RealMatrix b(2);
  b(0, 1) = 1.0;  // not antisymmetric
  CHECK_THROWS_AS(symbols::from_blocks(b, RealMatrix(2)), NotAntisymmetric);

  RealMatrix c(2);
  c(0, 1) = 1.0;  // not symmetric
  CHECK_THROWS_AS(symbols::from_blocks(RealMatrix(2), c), NotSymmetric);

  CHECK_THROWS_AS(symbols::from_blocks(RealMatrix(2), RealMatrix(3)), ShapeMismatch);
}

TEST_CASE("symbol_eval: oscillator, zero point, pure rotation") {
  auto osc = symbols::from_blocks(RealMatrix(2), RealMatrix::identity(2));
  std::vector<double> x = {0.3, -1.2};
  std::vector<double> xi = {0.7, 0.1};
  const double norm = (x[0] * x[0] + x[1] * x[1] + xi[0] * xi[0] + xi[1] * xi[1]) / 2.0;
  CHECK(symbols::symbol_eval(osc, x, xi) == doctest::Approx(norm).epsilon(1e-14));

  auto ang = symbols::from_blocks(rotation_block(), RealMatrix(2));
  CHECK(symbols::symbol_eval(ang, {0.0, 0.0}, {0.0, 0.0}) == 0.0);
  CHECK(symbols::symbol_eval(ang, {1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(-1.0));
}

TEST_CASE("symbol_eval agrees with the 2d block form and is linear") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> coef(-1.5, 1.5);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = 1 + trial % 3;
    auto a1 = testsupport::random_u_element(d, rng);
    auto a2 = testsupport::random_u_element(d, rng);
    std::vector<double> x(d), xi(d);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = coord(rng);
      xi[i] = coord(rng);
    }
    CHECK(std::abs(symbols::symbol_eval(a1, x, xi) -
                   symbols::symbol_eval_block_form(a1, x, xi)) < 1e-12);

    const double alpha = coef(rng);
    const double beta = coef(rng);
    linalg::RealMatrix bsum(d), csum(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        bsum(i, j) = alpha * a1.B(i, j) + beta * a2.B(i, j);
        csum(i, j) = alpha * a1.C(i, j) + beta * a2.C(i, j);
      }
    }
    auto sum = symbols::from_blocks(bsum, csum);
    CHECK(std::abs(symbols::symbol_eval(sum, x, xi) -
                   alpha * symbols::symbol_eval(a1, x, xi) -
                   beta * symbols::symbol_eval(a2, x, xi)) < 1e-10);
  }
}

TEST_CASE("frequencies are invariant under unitary conjugation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 2 + trial % 3;
    auto A = testsupport::random_u_element(d, rng);
    auto u = testsupport::random_unitary(d, rng);
    auto conj = u * (A.complex_form * u.adjoint());
    auto herm = linalg::Complex(0.0, -1.0) * conj;
    auto eig = linalg::hermitian_eigendecomposition(herm, 1e-8);
    for (std::size_t j = 0; j < d; ++j)
      CHECK(eig.values[j].real() == doctest::Approx(A.frequencies[j]).epsilon(1e-8));
  }
}

TEST_CASE("weyl_operator_coefficients: oscillator, angular momentum, hbar scaling") {
  auto osc = symbols::from_blocks(RealMatrix(2), RealMatrix::identity(2));
  auto w = symbols::weyl_operator_coefficients(osc, 1.0);
  CHECK(w.second_order(0, 0) == 1.0);
  CHECK(w.second_order(0, 1) == 0.0);
  CHECK(w.first_order.max_abs() == 0.0);
  CHECK(w.potential(1, 1) == 1.0);
  CHECK(w.zeroth_order == 0.0);

  auto ang = symbols::from_blocks(rotation_block(), RealMatrix(2));
  auto wa = symbols::weyl_operator_coefficients(ang, 1.0);
  CHECK(wa.second_order.max_abs() == 0.0);
  CHECK(wa.potential.max_abs() == 0.0);
  CHECK(wa.first_order(0, 1) == 1.0);
  CHECK(wa.first_order(1, 0) == -1.0);
  CHECK(wa.zeroth_order == 0.0);

  std::mt19937_64 rng(3);
  auto A = testsupport::random_u_element(3, rng);
  auto w1 = symbols::weyl_operator_coefficients(A, 1.0);
  auto w2 = symbols::weyl_operator_coefficients(A, 2.0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(w2.second_order(i, j) == doctest::Approx(4.0 * w1.second_order(i, j)));
      CHECK(w2.first_order(i, j) == doctest::Approx(2.0 * w1.first_order(i, j)));
      CHECK(w2.potential(i, j) == w1.potential(i, j));
    }
  }
}

TEST_CASE("harmonic_flow: identity, quarter turn, full period, symplectic") {
  std::vector<double> x = {1.0, -0.5};
  std::vector<double> xi = {0.25, 2.0};
  auto x0 = x;
  auto xi0 = xi;

  symbols::harmonic_flow(0.0, x, xi);
  CHECK(x == x0);
  CHECK(xi == xi0);

  symbols::harmonic_flow(M_PI / 2.0, x, xi);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(x[i] == doctest::Approx(xi0[i]).epsilon(1e-14));
    CHECK(xi[i] == doctest::Approx(-x0[i]).epsilon(1e-14));
  }

  x = x0;
  xi = xi0;
  symbols::harmonic_flow(2.0 * M_PI, x, xi);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(x[i] == doctest::Approx(x0[i]).epsilon(1e-12));
    CHECK(xi[i] == doctest::Approx(xi0[i]).epsilon(1e-12));
  }

  // The 2d x 2d flow matrix has determinant one.
  for (double t : {0.3, 1.1, 2.9}) {
    const double det = std::cos(t) * std::cos(t) + std::sin(t) * std::sin(t);
    CHECK(std::abs(det - 1.0) < 1e-10);
  }
}

TEST_CASE("constant of motion: oscillator exactly, random elements to 1e-9") {
  auto osc = symbols::from_blocks(RealMatrix(3), RealMatrix::identity(3));
  CHECK(symbols::verify_constant_of_motion(osc, 200, 1) < 1e-10);

  std::mt19937_64 rng(31);
  auto A = testsupport::random_u_element(2, rng);
  CHECK(symbols::verify_constant_of_motion(A, 100, 2) < 1e-9);
}
