#include "metaspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "metaspec/combinatorics.hpp"

namespace metaspec::spectrum {

namespace {

constexpr double kFrequencyMatchTol = 1e-8;

// Shared normalization: choose the largest scale x with s_j = p_j x integer
// multiples, so gcd of the nonzero |p_j| is 1.
RationalFrequencies from_rationals(const std::vector<Rational>& s) {
  if (s.empty()) throw ValidationError("RationalFrequencies: empty frequency list");
  Integer common_den = 1;
  for (const Rational& v : s) common_den = lcm(common_den, rational_den(v));

  std::vector<Integer> m(s.size());
  Integer common_gcd = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    m[j] = rational_num(s[j]) * (common_den / rational_den(s[j]));
    common_gcd = gcd(common_gcd, m[j]);
  }

  RationalFrequencies rf;
  if (common_gcd == 0) {  // all frequencies zero
    rf.x = 1;
    rf.p.assign(s.size(), Integer(0));
    rf.g = 0;
    rf.q_lcm = 1;
    return rf;
  }
  rf.x = Rational(common_gcd, common_den);
  rf.p.resize(s.size());
  rf.g = 0;
  rf.q_lcm = 1;
  for (std::size_t j = 0; j < s.size(); ++j) {
    rf.p[j] = m[j] / common_gcd;
    if (rf.p[j] != 0) {
      rf.g = gcd(rf.g, rf.p[j]);
      rf.q_lcm = lcm(rf.q_lcm, Integer(abs(rf.p[j])));
    }
  }
  return rf;
}

bool frequencies_match(const LieAlgebraElement& A, const RationalFrequencies& rf, double tol) {
  if (A.d != rf.dim()) return false;
  std::vector<double> reconstructed = rf.frequencies_double();
  std::sort(reconstructed.begin(), reconstructed.end());
  for (std::size_t j = 0; j < A.d; ++j) {
    if (std::abs(reconstructed[j] - A.frequencies[j]) > tol) return false;
  }
  return true;
}

// Principal argument of exp(2 pi i a) as an exact fraction in (-1/2, 1/2].
Rational principal_fraction(const Rational& a) {
  Rational frac = a - Rational(floor_rational(a));  // in [0, 1)
  if (frac > Rational(1, 2)) frac -= 1;
  return frac;
}

Complex unit_phase(double turns) {
  return Complex(std::cos(2.0 * M_PI * turns), std::sin(2.0 * M_PI * turns));
}

}  // namespace

RationalFrequencies RationalFrequencies::from_exact(const std::vector<Rational>& s) {
  return from_rationals(s);
}

std::vector<double> RationalFrequencies::frequencies_double() const {
  std::vector<double> out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[j] = to_double(frequency(j));
  return out;
}

Rational RationalFrequencies::ground_shift() const {
  Integer sum = 0;
  for (const Integer& pj : p) sum += pj;
  return Rational(-sum) * x / 2;
}

bool RationalFrequencies::all_negative() const {
  if (p.empty()) return false;
  return std::all_of(p.begin(), p.end(), [](const Integer& v) { return v < 0; });
}

bool RationalFrequencies::all_positive() const {
  if (p.empty()) return false;
  return std::all_of(p.begin(), p.end(), [](const Integer& v) { return v > 0; });
}

bool RationalFrequencies::has_zero() const {
  return std::any_of(p.begin(), p.end(), [](const Integer& v) { return v == 0; });
}

std::optional<Rational> rational_approximation(double value, const Integer& max_denominator,
                                               double tol, double* achieved) {
  if (max_denominator < 1) throw ValidationError("rational_approximation: bad denominator cap");
  if (!std::isfinite(value)) throw ValidationError("rational_approximation: non-finite value");

  const bool negative = value < 0.0;
  double y = std::abs(value);

  Integer h_prev = 1, h_prev2 = 0;  // numerators
  Integer k_prev = 0, k_prev2 = 1;  // denominators
  Rational best;
  double best_err = std::numeric_limits<double>::infinity();
  bool have = false;

  for (int step = 0; step < 64; ++step) {
    const double fl = std::floor(y);
    if (fl > 9.0e18) break;
    const Integer a(static_cast<long long>(fl));
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    if (k > max_denominator) break;
    Rational approx(negative ? -h : h, k);
    const double err = std::abs(value - to_double(approx));
    if (err < best_err) {
      best_err = err;
      best = approx;
      have = true;
    }
    if (err <= tol) {
      if (achieved) *achieved = err;
      return approx;  // first admissible convergent: minimal denominator
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const double rem = y - fl;
    if (rem < 1e-300) break;  // exact termination
    y = 1.0 / rem;
  }
  if (achieved) *achieved = have ? best_err : std::numeric_limits<double>::infinity();
  return std::nullopt;
}

RationalFrequencies rationalize(const std::vector<double>& s, const Integer& max_denominator,
                                double tol) {
  if (s.empty()) throw ValidationError("rationalize: empty frequency list");
  std::vector<Rational> approx(s.size());
  double worst = 0.0;
  bool failed = false;
  for (std::size_t j = 0; j < s.size(); ++j) {
    double err = 0.0;
    auto r = rational_approximation(s[j], max_denominator, tol, &err);
    worst = std::max(worst, err);
    if (!r) {
      failed = true;
    } else {
      approx[j] = *r;
    }
  }
  if (failed)
    throw ReconstructionFailed("rationalize: no admissible approximant for some frequency",
                               worst);
  return from_rationals(approx);
}

SpectrumClassification classify(const LieAlgebraElement& A, const RationalFrequencies& exact) {
  if (!frequencies_match(A, exact, kFrequencyMatchTol))
    throw InconsistentExactData("classify: exact frequencies do not reproduce the element's");
  SpectrumClassification out;
  out.kind = SpectrumKind::UniformlyDiscrete;
  out.rational = exact;
  out.generator = Rational(exact.g) * exact.x;
  out.heuristic = false;
  return out;
}

SpectrumClassification classify(const LieAlgebraElement& A, const NumericMode& mode) {
  SpectrumClassification out;
  out.heuristic = true;
  try {
    RationalFrequencies rf = rationalize(A.frequencies, mode.max_denominator, mode.tol);
    out.kind = SpectrumKind::UniformlyDiscrete;
    out.generator = Rational(rf.g) * rf.x;
    out.rational = std::move(rf);
  } catch (const ReconstructionFailed&) {
    out.kind = SpectrumKind::Dense;
  }
  return out;
}

PointSpectrum enumerate_point_spectrum(const LieAlgebraElement& A, const RationalFrequencies& rf,
                                       double cutoff, int n_max) {
  if (n_max < 1) throw ValidationError("enumerate_point_spectrum: n_max must be >= 1");
  if (!frequencies_match(A, rf, kFrequencyMatchTol))
    throw NotDiscrete("enumerate_point_spectrum: frequencies do not match the rational data");

  const Rational e0 = rf.ground_shift();
  const Rational cut = rational_from_double(cutoff);
  PointSpectrum out;

  if (rf.all_negative()) {
    std::vector<Integer> parts;
    for (const Integer& pj : rf.p) parts.push_back(-pj);
    const Rational span = (cut - e0) / rf.x;
    out.complete = true;
    if (span < 0) return out;
    const Integer K = floor_rational(span);
    if (K > Integer(10'000'000))
      throw ValidationError("enumerate_point_spectrum: cutoff too far above the ground state");
    const std::size_t kk = K.convert_to<std::size_t>();
    const std::vector<Integer> table = combinatorics::denumerant_table(parts, kk);
    for (std::size_t m = 0; m <= kk; ++m) {
      if (table[m] == 0) continue;
      out.eigenvalues.push_back({e0 + Rational(Integer(m)) * rf.x, false, table[m]});
    }
    return out;
  }

  if (rf.all_positive()) {
    // Spectrum extends to -infinity; report the top slice below the cutoff.
    const Rational span = (e0 - cut) / rf.x;
    Integer m_min = span > 0 ? -floor_rational(-span) : Integer(0);  // ceil, clamped at 0
    if (m_min < 0) m_min = 0;
    const Integer m_max = m_min + n_max;
    const std::size_t hi = m_max.convert_to<std::size_t>();
    const std::vector<Integer> table = combinatorics::denumerant_table(rf.p, hi);
    for (Integer m = m_min; m <= m_max; ++m) {
      const Integer cnt = table[m.convert_to<std::size_t>()];
      if (cnt == 0) continue;
      out.eigenvalues.push_back({e0 - Rational(m) * rf.x, false, cnt});
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
              [](const EigenvalueEntry& a, const EigenvalueEntry& b) { return a.value < b.value; });
    out.complete = false;
    return out;
  }

  // Mixed signs or zeros: reachable window with each n_j <= n_max, every
  // entry of infinite multiplicity.
  Integer lo = 0, hi = 0;
  for (const Integer& pj : rf.p) {
    if (pj < 0) lo += Integer(n_max) * pj;
    if (pj > 0) hi += Integer(n_max) * pj;
  }
  const long long offset = (-lo).convert_to<long long>();
  const long long range = (hi - lo).convert_to<long long>() + 1;
  std::vector<char> reach(static_cast<std::size_t>(range), 0);
  reach[static_cast<std::size_t>(offset)] = 1;  // n = 0
  for (const Integer& pj : rf.p) {
    if (pj == 0) continue;
    const long long step = pj.convert_to<long long>();
    std::vector<char> next = reach;
    for (long long idx = 0; idx < range; ++idx) {
      if (!reach[static_cast<std::size_t>(idx)]) continue;
      long long at = idx;
      for (int n = 1; n <= n_max; ++n) {
        at += step;
        if (at < 0 || at >= range) break;
        next[static_cast<std::size_t>(at)] = 1;
      }
    }
    reach = std::move(next);
  }
  for (long long idx = 0; idx < range; ++idx) {
    if (!reach[static_cast<std::size_t>(idx)]) continue;
    const Integer m = Integer(idx) - Integer(offset);  // sum n_j p_j
    const Rational value = e0 - Rational(m) * rf.x;
    if (value <= cut) out.eigenvalues.push_back({value, true, 0});
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const EigenvalueEntry& a, const EigenvalueEntry& b) { return a.value < b.value; });
  out.complete = false;
  return out;
}

MuSpectrum mu_spectrum_from_angles(const std::vector<Rational>& angles) {
  if (angles.empty()) throw ValidationError("mu_spectrum_from_angles: empty angle list");

  Integer q = 1;
  for (const Rational& a : angles) q = lcm(q, rational_den(a));
  Integer p = 0;
  Rational angle_sum = 0;
  for (const Rational& a : angles) {
    const Integer m = q / rational_den(a) * abs(rational_num(a));
    p = gcd(p, m);
    angle_sum += a;
  }

  MuSpectrum out;
  out.kind = MuKind::FiniteGroup;
  out.q = q;
  out.p = p;

  // det(g)^{-1/2}: principal square root of exp(-2 pi i sum(angles)).
  const Rational inv_det_turns = principal_fraction(-angle_sum);
  const Complex principal = unit_phase(to_double(inv_det_turns) / 2.0);
  out.phase_branches = {principal, -principal};

  const Integer ghat = p == 0 ? q : gcd(p, q);
  const Integer count = q / ghat;
  std::vector<Complex> elements;
  for (Integer m = 0; m < count; ++m) {
    const Rational turns(m * ghat, q);
    elements.push_back(principal * unit_phase(to_double(turns)));
  }
  out.elements = std::move(elements);
  return out;
}

namespace {

std::vector<double> sorted_args(std::vector<Complex> values) {
  std::vector<double> args(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) args[i] = std::arg(values[i]);
  std::sort(args.begin(), args.end());
  return args;
}

}  // namespace

MuSpectrum mu_point_spectrum(const ComplexMatrix& g, const std::vector<Rational>& angles,
                             double tol) {
  if (!linalg::validate_unitary(g)) throw NotUnitary("mu_point_spectrum: matrix is not unitary");
  if (angles.size() != g.dim())
    throw ShapeMismatch("mu_point_spectrum: angle count does not match dimension");

  auto eig = linalg::normal_eigendecomposition(g);
  std::vector<double> numeric = sorted_args(eig.values);
  std::vector<Complex> claimed(angles.size());
  for (std::size_t j = 0; j < angles.size(); ++j)
    claimed[j] = unit_phase(to_double(principal_fraction(angles[j])));
  std::vector<double> exact = sorted_args(claimed);
  for (std::size_t j = 0; j < numeric.size(); ++j) {
    double diff = std::abs(numeric[j] - exact[j]);
    diff = std::min(diff, std::abs(diff - 2.0 * M_PI));
    if (diff > tol)
      throw AngleInconsistent("mu_point_spectrum: exact angles disagree with the matrix");
  }
  return mu_spectrum_from_angles(angles);
}

MuSpectrum mu_point_spectrum(const ComplexMatrix& g, const NumericMode& mode) {
  if (!linalg::validate_unitary(g)) throw NotUnitary("mu_point_spectrum: matrix is not unitary");
  auto eig = linalg::normal_eigendecomposition(g);

  std::vector<Rational> angles(eig.values.size());
  for (std::size_t j = 0; j < eig.values.size(); ++j) {
    const double turns = std::arg(eig.values[j]) / (2.0 * M_PI);
    auto r = rational_approximation(turns, mode.max_denominator, mode.tol);
    if (!r) {
      // Irrational rotation eigenvalue: the whole circle.
      MuSpectrum out;
      out.kind = MuKind::FullCircle;
      const Complex inv_det = 1.0 / linalg::determinant(g);
      const Complex principal = std::sqrt(inv_det);
      out.phase_branches = {principal, -principal};
      return out;
    }
    angles[j] = *r;
  }
  return mu_spectrum_from_angles(angles);
}

}  // namespace metaspec::spectrum
