// Test-only oracles and generators, independent of the library's solvers.
#ifndef METASPEC_TESTS_ORACLES_HPP_
#define METASPEC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "metaspec/linalg.hpp"
#include "metaspec/symbols.hpp"

namespace metaspec::testsupport {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::RealMatrix;

inline ComplexMatrix random_hermitian(std::size_t d, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> entry(-scale, scale);
  ComplexMatrix h(d);
  for (std::size_t i = 0; i < d; ++i) {
    h(i, i) = entry(rng);
    for (std::size_t j = i + 1; j < d; ++j) {
      h(i, j) = Complex(entry(rng), entry(rng));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

// Product of random complex Givens rotations and phases.
inline ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  ComplexMatrix u = ComplexMatrix::identity(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double a = angle(rng);
    u(i, i) = Complex(std::cos(a), std::sin(a));
  }
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = p + 1; q < d; ++q) {
      const double theta = angle(rng);
      const double phi = angle(rng);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const Complex w(std::cos(phi), std::sin(phi));
      for (std::size_t k = 0; k < d; ++k) {
        const Complex up = u(k, p);
        const Complex uq = u(k, q);
        u(k, p) = c * up + s * w * uq;
        u(k, q) = -s * std::conj(w) * up + c * uq;
      }
    }
  }
  return u;
}

inline symbols::LieAlgebraElement random_u_element(std::size_t d, std::mt19937_64& rng,
                                                   double scale = 1.0) {
  std::uniform_real_distribution<double> entry(-scale, scale);
  RealMatrix B(d);
  RealMatrix C(d);
  for (std::size_t i = 0; i < d; ++i) {
    C(i, i) = entry(rng);
    for (std::size_t j = i + 1; j < d; ++j) {
      B(i, j) = entry(rng);
      B(j, i) = -B(i, j);
      C(i, j) = entry(rng);
      C(j, i) = C(i, j);
    }
  }
  return symbols::from_blocks(B, C);
}

// Characteristic polynomial coefficients by the Faddeev-LeVerrier recursion:
// returns c_0..c_n with det(xI - M) = sum c_j x^j, c_n = 1.
inline std::vector<Complex> characteristic_polynomial(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Complex> coeffs(n + 1, Complex(0.0));
  coeffs[n] = 1.0;
  ComplexMatrix aux = ComplexMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    aux = m * aux;
    const Complex c = -aux.trace() / static_cast<double>(k);
    coeffs[n - k] = c;
    for (std::size_t i = 0; i < n; ++i) aux(i, i) += c;
  }
  return coeffs;
}

// Durand-Kerner simultaneous root iteration on a monic polynomial.
inline std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs,
                                             int iterations = 400) {
  const std::size_t degree = coeffs.size() - 1;
  auto eval = [&](Complex z) {
    Complex acc = 0.0;
    for (std::size_t j = coeffs.size(); j > 0; --j) acc = acc * z + coeffs[j - 1];
    return acc;
  };
  std::vector<Complex> roots(degree);
  const Complex seed(0.4, 0.9);
  Complex power = 1.0;
  for (std::size_t i = 0; i < degree; ++i) {
    power *= seed;
    roots[i] = power;
  }
  for (int it = 0; it < iterations; ++it) {
    double moved = 0.0;
    for (std::size_t i = 0; i < degree; ++i) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      const Complex delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  return roots;
}

// Exhaustive count of representations k = sum n_j p_j for every k <= budget.
inline void exhaustive_denumerant(const std::vector<long>& parts, std::size_t pos, long used,
                                  long budget, std::vector<long long>& histogram) {
  if (pos + 1 == parts.size()) {
    for (long v = 0; used + v * parts[pos] <= budget; ++v) ++histogram[used + v * parts[pos]];
    return;
  }
  for (long v = 0; used + v * parts[pos] <= budget; ++v)
    exhaustive_denumerant(parts, pos + 1, used + v * parts[pos], budget, histogram);
}

// Brute-force closure of {conj(theta)^n : 0 <= n_j <= cap} as sorted angles
// in [0, 2 pi), deduplicated at 1e-9.
inline std::vector<double> closure_angles(const std::vector<double>& turns, int cap = 20) {
  std::vector<std::vector<Complex>> powers(turns.size());
  for (std::size_t j = 0; j < turns.size(); ++j) {
    powers[j].resize(cap + 1);
    for (int n = 0; n <= cap; ++n) {
      const double a = -2.0 * M_PI * turns[j] * n;
      powers[j][n] = Complex(std::cos(a), std::sin(a));
    }
  }
  std::vector<double> angles;
  std::vector<int> n(turns.size(), 0);
  while (true) {
    Complex z = 1.0;
    for (std::size_t j = 0; j < turns.size(); ++j) z *= powers[j][n[j]];
    double a = std::arg(z);
    if (a < 0) a += 2.0 * M_PI;
    if (a >= 2.0 * M_PI - 1e-9) a = 0.0;
    angles.push_back(a);
    std::size_t j = 0;
    for (; j < turns.size(); ++j) {
      if (++n[j] <= cap) break;
      n[j] = 0;
    }
    if (j == turns.size()) break;
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-9; }),
               angles.end());
  return angles;
}

}  // namespace metaspec::testsupport

#endif  // METASPEC_TESTS_ORACLES_HPP_
