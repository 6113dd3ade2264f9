#ifndef METASPEC_ASYMPTOTICS_HPP_
#define METASPEC_ASYMPTOTICS_HPP_

#include <iosfwd>
#include <vector>

#include "metaspec/combinatorics.hpp"
#include "metaspec/spectrum.hpp"

namespace metaspec::asymptotics {

using spectrum::RationalFrequencies;
using symbols::LieAlgebraElement;

// Volume of {x >= 0, sum |s_j| x_j <= t}: t^d / (d! prod |s_j|).
double polytope_volume(const std::vector<double>& s, double t);

// Volume of the sublevel ellipsoid {g <= t}, g = (1/2) sum |s_j|(x_j^2+xi_j^2):
// (2 pi)^d times the polytope volume.
double ellipsoid_volume(const std::vector<double>& s, double t);

// Euclidean (d-1)-volume of the slanted face {x >= 0, sum |s_j| x_j = t}.
double face_volume(const std::vector<double>& s, double t);

// Value of the boundary integral of ||grad g||^{-1} over {g = t}.
double surface_integral(const std::vector<double>& s, double t);

// Two-term counting estimates at threshold r for the hbar-scaled operator.
// The lattice variant uses the relative-lattice slanted-facet volume in the
// second term; the paper variant uses the Euclidean one. Both fold in the
// ground-shift recentering of the expansion.
struct WeylEstimate {
  double hbar = 1.0;
  double r = 0.0;
  double leading = 0.0;
  double second_paper = 0.0;
  double second_lattice = 0.0;
  double total_paper = 0.0;
  double total_lattice = 0.0;
  Integer exact = 0;
  double remainder_paper = 0.0;
  double remainder_lattice = 0.0;
};

// Exact-rational core; all frequencies must be negative.
WeylEstimate weyl_estimate(const RationalFrequencies& rf, const Rational& hbar, const Rational& r);
// Convenience wrapper validating rf against A; doubles convert exactly.
WeylEstimate weyl_estimate(const LieAlgebraElement& A, const RationalFrequencies& rf, double hbar,
                           double r);

// Remainders along the aligned grid r_k = hbar (k q_lcm x + E_0), k = 1..k_max.
// `normalized_*` divide by (r/hbar)^{d-2}, the order claimed for the
// lattice-corrected remainder.
struct RemainderScan {
  std::size_t d = 0;
  double hbar = 1.0;
  std::vector<Integer> grid_k;
  std::vector<double> grid_r;
  std::vector<double> grid_u;  // r/hbar
  std::vector<Integer> exact;
  std::vector<double> leading;
  std::vector<double> second_paper;
  std::vector<double> second_lattice;
  std::vector<double> remainder_paper;
  std::vector<double> remainder_lattice;
  std::vector<double> normalized_paper;
  std::vector<double> normalized_lattice;
  double sup_normalized_paper = 0.0;
  double sup_normalized_lattice = 0.0;
};

RemainderScan remainder_scan(const RationalFrequencies& rf, const Rational& hbar, int k_max);
RemainderScan remainder_scan(const LieAlgebraElement& A, const RationalFrequencies& rf,
                             double hbar, int k_max);

// N^hbar(r) computed by scaling the spectrum vs. counting at r/hbar; the two
// routes must agree exactly.
bool hbar_rescale_check(const RationalFrequencies& rf, const Rational& E0, const Rational& hbar,
                        const Rational& r);

void write_csv(std::ostream& out, const RemainderScan& scan);

}  // namespace metaspec::asymptotics

#endif  // METASPEC_ASYMPTOTICS_HPP_
