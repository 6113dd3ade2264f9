#ifndef METASPEC_SYMBOLS_HPP_
#define METASPEC_SYMBOLS_HPP_

#include <cstdint>
#include <vector>

#include "metaspec/linalg.hpp"

namespace metaspec::symbols {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::RealMatrix;

// An element of u(d) in real block form. B must be antisymmetric, C
// symmetric; the complex form is A_c = B - iC, so that (B=0, C=I) gives
// A_c = -iI and frequencies s = (-1, ..., -1), matching the oscillator
// spectrum N0 + d/2. The opposite sign convention would flip s -> -s.
struct LieAlgebraElement {
  std::size_t d = 0;
  RealMatrix B;
  RealMatrix C;
  ComplexMatrix complex_form;       // B - iC, anti-Hermitian
  std::vector<double> frequencies;  // s_j ascending; A_c v_j = i s_j v_j
  ComplexMatrix eigenbasis;         // columns v_j, paired with frequencies
  double ground_shift = 0.0;        // E_0 = -(1/2) sum s_j
};

// Coefficient matrices of the quantized operator
//   -(1/2) sum second_order_jk d^2/dx_j dx_k
//   + i    sum first_order_jk  x_k d/dx_j
//   +(1/2) sum potential_jk    x_j x_k
//   + zeroth_order.
// Powers of hbar are folded into the stored matrices: second_order = hbar^2 C,
// first_order = hbar B, potential = C, zeroth_order = -(hbar/2) tr B = 0.
struct WeylOperatorCoefficients {
  double hbar = 1.0;
  RealMatrix second_order;
  RealMatrix first_order;
  RealMatrix potential;
  double zeroth_order = 0.0;
};

constexpr double kBlockSymmetryTol = 1e-12;

// Validates the block structure and precomputes the eigen-data.
// Throws ShapeMismatch / NotAntisymmetric / NotSymmetric.
LieAlgebraElement from_blocks(const RealMatrix& B, const RealMatrix& C);

// p_A(x, xi) = (1/2)<x, Cx> - <x, B xi> + (1/2)<xi, C xi>.
double symbol_eval(const LieAlgebraElement& A, const std::vector<double>& x,
                   const std::vector<double>& xi);

// Same value through the 2d x 2d bilinear form -(1/2) w . (A J) w; kept as an
// independent route for cross-checking symbol_eval.
double symbol_eval_block_form(const LieAlgebraElement& A, const std::vector<double>& x,
                              const std::vector<double>& xi);

WeylOperatorCoefficients weyl_operator_coefficients(const LieAlgebraElement& A, double hbar);

// phi_t: (x, xi) -> (x cos t + xi sin t, -x sin t + xi cos t).
void harmonic_flow(double t, std::vector<double>& x, std::vector<double>& xi);

// Max over sampled (t, x, xi) of |p_A(phi_t(x, xi)) - p_A(x, xi)|.
double verify_constant_of_motion(const LieAlgebraElement& A, int sample_count,
                                 std::uint64_t seed);

}  // namespace metaspec::symbols

#endif  // METASPEC_SYMBOLS_HPP_
