#ifndef METASPEC_SPECTRUM_HPP_
#define METASPEC_SPECTRUM_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "metaspec/rational.hpp"
#include "metaspec/symbols.hpp"

namespace metaspec::spectrum {

using linalg::Complex;
using linalg::ComplexMatrix;
using symbols::LieAlgebraElement;

// Exact frequencies s_j = p_j * x with x > 0 rational and integer p_j,
// normalized so that gcd over the nonzero |p_j| is 1 when built by
// rationalize/from_exact (callers may construct coarser scales by hand).
struct RationalFrequencies {
  Rational x = 1;
  std::vector<Integer> p;
  Integer g = 0;      // gcd of |p_j| over nonzero entries, 0 if all zero
  Integer q_lcm = 1;  // lcm of |p_j| over nonzero entries, 1 if all zero

  static RationalFrequencies from_exact(const std::vector<Rational>& s);

  std::size_t dim() const { return p.size(); }
  Rational frequency(std::size_t j) const { return Rational(p[j]) * x; }
  std::vector<double> frequencies_double() const;
  // E_0 = -(1/2) sum s_j
  Rational ground_shift() const;
  bool all_negative() const;
  bool all_positive() const;
  bool has_zero() const;
  bool same_sign() const { return all_negative() || all_positive(); }
};

enum class SpectrumKind { UniformlyDiscrete, Dense };

struct SpectrumClassification {
  SpectrumKind kind = SpectrumKind::Dense;
  std::optional<RationalFrequencies> rational;
  std::optional<Rational> generator;  // g * x, the generator of Z(s)
  bool heuristic = false;             // true when reconstructed from floats
};

enum class MuKind { FullCircle, FiniteGroup };

struct MuSpectrum {
  MuKind kind = MuKind::FullCircle;
  Integer q = 0;
  Integer p = 0;
  std::pair<Complex, Complex> phase_branches;  // +/- det(g)^{-1/2}
  std::optional<std::vector<Complex>> elements;  // principal branch, angle-sorted
};

struct EigenvalueEntry {
  Rational value;
  bool infinite_multiplicity = false;
  Integer multiplicity = 0;  // meaningful when finite
};

struct PointSpectrum {
  std::vector<EigenvalueEntry> eigenvalues;  // ascending
  bool complete = false;
};

struct NumericMode {
  Integer max_denominator = 1000000;
  double tol = 1e-10;
};

// Best rational approximation by continued fractions: the smallest-denominator
// convergent within tol, subject to the denominator cap. nullopt if no
// convergent under the cap reaches tol; `achieved` reports the best residual.
std::optional<Rational> rational_approximation(double value, const Integer& max_denominator,
                                               double tol, double* achieved = nullptr);

// Throws ReconstructionFailed when some entry has no admissible approximant.
RationalFrequencies rationalize(const std::vector<double>& s, const Integer& max_denominator,
                                double tol);

SpectrumClassification classify(const LieAlgebraElement& A, const RationalFrequencies& exact);
SpectrumClassification classify(const LieAlgebraElement& A, const NumericMode& mode);

// All s_j < 0: the complete listing below cutoff with exact multiplicities.
// Mixed signs or zeros: the window reachable with each n_j <= n_max, entries
// flagged as infinite multiplicity, listing marked incomplete. All s_j > 0:
// the top slice of the (downward-infinite) spectrum, finite multiplicities,
// incomplete.
PointSpectrum enumerate_point_spectrum(const LieAlgebraElement& A, const RationalFrequencies& rf,
                                       double cutoff, int n_max = 50);

// Exact angles a_j = p_j/q_j with theta_j = exp(2 pi i a_j).
MuSpectrum mu_spectrum_from_angles(const std::vector<Rational>& angles);

// Exact mode: verifies the claimed angles against g's numeric eigenvalues
// (AngleInconsistent beyond tol), then delegates to the exact computation.
MuSpectrum mu_point_spectrum(const ComplexMatrix& g, const std::vector<Rational>& angles,
                             double tol = 1e-8);

// Numeric mode: reconstructs angles from the eigendecomposition; any failed
// reconstruction yields FullCircle.
MuSpectrum mu_point_spectrum(const ComplexMatrix& g, const NumericMode& mode);

}  // namespace metaspec::spectrum

#endif  // METASPEC_SPECTRUM_HPP_
