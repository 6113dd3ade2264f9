#include "metaspec/symbols.hpp"

#include <cmath>
#include <random>

namespace metaspec::symbols {

LieAlgebraElement from_blocks(const RealMatrix& B, const RealMatrix& C) {
  const std::size_t d = B.dim();
  if (d == 0) throw ShapeMismatch("from_blocks: empty blocks");
  if (C.dim() != d) throw ShapeMismatch("from_blocks: B and C sizes differ");

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (std::abs(B(i, j) + B(j, i)) > kBlockSymmetryTol)
        throw NotAntisymmetric("from_blocks: B is not antisymmetric");
      if (std::abs(C(i, j) - C(j, i)) > kBlockSymmetryTol)
        throw NotSymmetric("from_blocks: C is not symmetric");
    }
  }

  LieAlgebraElement A;
  A.d = d;
  A.B = B;
  A.C = C;
  A.complex_form = ComplexMatrix(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) A.complex_form(i, j) = Complex(B(i, j), -C(i, j));

  // -i A_c is Hermitian; its eigenvalues are the frequencies s_j.
  ComplexMatrix herm = Complex(0.0, -1.0) * A.complex_form;
  auto eig = linalg::hermitian_eigendecomposition(herm);
  A.frequencies.resize(d);
  double sum = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    A.frequencies[j] = eig.values[j].real();
    sum += A.frequencies[j];
  }
  A.eigenbasis = eig.vectors;
  A.ground_shift = -0.5 * sum;
  return A;
}

double symbol_eval(const LieAlgebraElement& A, const std::vector<double>& x,
                   const std::vector<double>& xi) {
  const std::size_t d = A.d;
  if (x.size() != d || xi.size() != d) throw ShapeMismatch("symbol_eval: vector length != d");
  double quad_x = 0.0;
  double quad_xi = 0.0;
  double cross = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      quad_x += x[i] * A.C(i, j) * x[j];
      quad_xi += xi[i] * A.C(i, j) * xi[j];
      cross += x[i] * A.B(i, j) * xi[j];
    }
  }
  return 0.5 * quad_x - cross + 0.5 * quad_xi;
}

double symbol_eval_block_form(const LieAlgebraElement& A, const std::vector<double>& x,
                              const std::vector<double>& xi) {
  const std::size_t d = A.d;
  if (x.size() != d || xi.size() != d)
    throw ShapeMismatch("symbol_eval_block_form: vector length != d");
  // A J = [[-C, B], [-B, -C]] for the block form [[B, C], [-C, B]].
  std::vector<double> w(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    w[i] = x[i];
    w[d + i] = xi[i];
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double top = 0.0;
    double bottom = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      top += -A.C(i, j) * w[j] + A.B(i, j) * w[d + j];
      bottom += -A.B(i, j) * w[j] - A.C(i, j) * w[d + j];
    }
    acc += w[i] * top + w[d + i] * bottom;
  }
  return -0.5 * acc;
}

WeylOperatorCoefficients weyl_operator_coefficients(const LieAlgebraElement& A, double hbar) {
  if (!(hbar > 0.0)) throw ValidationError("weyl_operator_coefficients: hbar must be positive");
  WeylOperatorCoefficients out;
  out.hbar = hbar;
  out.second_order = RealMatrix(A.d);
  out.first_order = RealMatrix(A.d);
  out.potential = A.C;
  for (std::size_t i = 0; i < A.d; ++i) {
    for (std::size_t j = 0; j < A.d; ++j) {
      out.second_order(i, j) = hbar * hbar * A.C(i, j);
      out.first_order(i, j) = hbar * A.B(i, j);
    }
  }
  out.zeroth_order = -0.5 * hbar * A.B.trace();  // zero: tr B = 0 for antisymmetric B
  return out;
}

void harmonic_flow(double t, std::vector<double>& x, std::vector<double>& xi) {
  if (x.size() != xi.size()) throw ShapeMismatch("harmonic_flow: vector length mismatch");
  const double c = std::cos(t);
  const double s = std::sin(t);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xn = x[i] * c + xi[i] * s;
    const double xin = -x[i] * s + xi[i] * c;
    x[i] = xn;
    xi[i] = xin;
  }
}

double verify_constant_of_motion(const LieAlgebraElement& A, int sample_count,
                                 std::uint64_t seed) {
  if (sample_count < 1) throw ValidationError("verify_constant_of_motion: sample_count < 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

  double worst = 0.0;
  std::vector<double> x(A.d);
  std::vector<double> xi(A.d);
  for (int s = 0; s < sample_count; ++s) {
    for (std::size_t i = 0; i < A.d; ++i) {
      x[i] = coord(rng);
      xi[i] = coord(rng);
    }
    const double t = angle(rng);
    const double before = symbol_eval(A, x, xi);
    harmonic_flow(t, x, xi);
    const double after = symbol_eval(A, x, xi);
    worst = std::max(worst, std::abs(after - before));
  }
  return worst;
}

}  // namespace metaspec::symbols
