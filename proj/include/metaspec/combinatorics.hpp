#ifndef METASPEC_COMBINATORICS_HPP_
#define METASPEC_COMBINATORICS_HPP_

#include <vector>

#include "metaspec/rational.hpp"
#include "metaspec/spectrum.hpp"

namespace metaspec::combinatorics {

using spectrum::RationalFrequencies;

// Number of representations k = sum n_j p_j with n in N_0^d; coin-problem DP
// over exact integers.
Integer denumerant(const std::vector<Integer>& p, const Integer& k);

// denumerant(p, 0..k_max) in one pass.
std::vector<Integer> denumerant_table(const std::vector<Integer>& p, std::size_t k_max);

struct MultiplicityResult {
  enum class Kind { Finite, Infinite, NotAnEigenvalue };
  Kind kind = Kind::NotAnEigenvalue;
  Integer count = 0;  // meaningful for Finite
};

// Multiplicity of lambda as an eigenvalue of the operator with frequencies rf.
// Same-sign frequencies reduce to a denumerant; mixed signs (or a zero among
// nonzeros) give Infinite/NotAnEigenvalue, membership decided by a bounded
// search over representations.
MultiplicityResult multiplicity(const RationalFrequencies& rf, const Rational& lambda);

// Per-residue-class polynomial values of the denumerant; the period is the
// minimal divisor of lcm(p) admitting an exact fit over the window.
struct QuasiPolynomial {
  std::size_t degree = 0;  // d - 1
  std::size_t period = 1;
  std::vector<std::vector<Rational>> classes;  // period rows of degree+1 coefficients

  Rational evaluate(const Integer& k) const;
};

QuasiPolynomial quasi_polynomial_fit(const std::vector<Integer>& p, std::size_t k_window);

// #(kP intersect Z^d) for P = {x >= 0, -sum x_j p_j <= q}, all p_j < 0.
Integer lattice_count_simplex(const std::vector<Integer>& p, const Integer& q, const Integer& k);

struct EhrhartPolynomial {
  std::vector<Rational> coefficients;  // c_0 .. c_d
  std::vector<Integer> p;              // negative entries defining P
  Integer q = 1;
  // Relative lattice volumes: the x_1 = 0 ... x_d = 0 facets, then the
  // slanted facet. Half their sum equals c_{d-1}.
  std::vector<Rational> facet_lattice_volumes;
  // The Euclidean reading of the slanted facet, kept for comparison; it is
  // ||p||_2 / gcd(|p|) times the lattice value.
  double slant_facet_euclidean_volume = 0.0;

  Rational evaluate(const Integer& k) const;
};

EhrhartPolynomial ehrhart_polynomial(const std::vector<Integer>& p, const Integer& q);

// Exact N(r) = #{n in N_0^d : sum n_j |p_j| x + E_0 <= r}; 0 when r < E_0.
Integer counting_function(const RationalFrequencies& rf, const Rational& E0, const Rational& r);

struct SandwichReport {
  Integer k = 0;  // floor((r - E_0) / (q_lcm x))
  Integer lower = 0;
  Integer upper = 0;
  Integer actual = 0;
  bool aligned = false;
};

SandwichReport verify_sandwich(const RationalFrequencies& rf, const Rational& E0,
                               const Rational& r);
// Variant with a precomputed polynomial, for grid scans.
SandwichReport verify_sandwich(const RationalFrequencies& rf, const Rational& E0,
                               const Rational& r, const EhrhartPolynomial& ehrhart);

// Exact Lagrange interpolation through (points[i], values[i]).
std::vector<Rational> interpolate_polynomial(const std::vector<Rational>& points,
                                             const std::vector<Rational>& values);

Rational evaluate_polynomial(const std::vector<Rational>& coefficients, const Rational& at);

}  // namespace metaspec::combinatorics

#endif  // METASPEC_COMBINATORICS_HPP_
