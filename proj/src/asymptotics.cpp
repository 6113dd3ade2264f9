#include "metaspec/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace metaspec::asymptotics {

namespace {

void check_frequencies(const std::vector<double>& s, const char* where) {
  if (s.empty()) throw ValidationError(std::string(where) + ": empty frequency list");
  for (double v : s) {
    if (v == 0.0) throw ZeroFrequency(std::string(where) + ": zero frequency");
  }
}

double abs_product(const std::vector<double>& s) {
  double prod = 1.0;
  for (double v : s) prod *= std::abs(v);
  return prod;
}

double norm2(const std::vector<double>& s) {
  double acc = 0.0;
  for (double v : s) acc += v * v;
  return std::sqrt(acc);
}

double factorial_double(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

Rational rational_pow(const Rational& base, std::size_t n) {
  Rational acc = 1;
  for (std::size_t i = 0; i < n; ++i) acc *= base;
  return acc;
}

struct SecondTermData {
  Rational c_d;
  Rational coeff_lattice;      // multiplies u^{d-1}
  double coeff_paper = 0.0;    // same, Euclidean slanted facet
  Rational leading_scale;      // 1 / (d! prod |s_j|) = c_d (qx)^{-d}
  Rational e0;
  Rational qx;
};

SecondTermData second_term_data(const RationalFrequencies& rf,
                                const combinatorics::EhrhartPolynomial& eh) {
  const std::size_t d = rf.dim();
  SecondTermData data;
  data.e0 = rf.ground_shift();
  data.qx = Rational(rf.q_lcm) * rf.x;
  data.c_d = eh.coefficients[d];
  const Rational c_dm1 = eh.coefficients[d - 1];
  const Rational qx_pow_dm1 = rational_pow(data.qx, d - 1);
  data.leading_scale = data.c_d / rational_pow(data.qx, d);
  data.coeff_lattice = c_dm1 / qx_pow_dm1 - Rational(d) * data.leading_scale * data.e0;

  // Euclidean variant replaces the lattice slanted-facet volume inside
  // c_{d-1} = (1/2) sum(facets) by the Euclidean one.
  const Rational slant_lattice = eh.facet_lattice_volumes.back();
  const double delta_half = 0.5 * (eh.slant_facet_euclidean_volume - to_double(slant_lattice));
  data.coeff_paper = to_double(data.coeff_lattice) + delta_half / to_double(qx_pow_dm1);
  return data;
}

WeylEstimate estimate_at(const RationalFrequencies& rf, const SecondTermData& data,
                         const Rational& hbar, const Rational& r) {
  if (!(hbar > 0)) throw ValidationError("weyl_estimate: hbar must be positive");
  const std::size_t d = rf.dim();
  const Rational u = r / hbar;

  WeylEstimate out;
  out.hbar = to_double(hbar);
  out.r = to_double(r);

  const Rational leading = data.leading_scale * rational_pow(u, d);
  const Rational second_lattice = data.coeff_lattice * rational_pow(u, d - 1);
  out.leading = to_double(leading);
  out.second_lattice = to_double(second_lattice);
  out.second_paper = data.coeff_paper * to_double(rational_pow(u, d - 1));
  out.exact = combinatorics::counting_function(rf, data.e0, u);

  out.total_lattice = to_double(leading + second_lattice);
  out.total_paper = out.leading + out.second_paper;
  // Lattice remainder stays exact until the final conversion.
  out.remainder_lattice = to_double(Rational(out.exact) - leading - second_lattice);
  out.remainder_paper = out.exact.convert_to<double>() - out.total_paper;
  return out;
}

}  // namespace

double polytope_volume(const std::vector<double>& s, double t) {
  check_frequencies(s, "polytope_volume");
  if (t < 0.0) throw ValidationError("polytope_volume: t must be nonnegative");
  return std::pow(t, static_cast<double>(s.size())) /
         (factorial_double(s.size()) * abs_product(s));
}

double ellipsoid_volume(const std::vector<double>& s, double t) {
  check_frequencies(s, "ellipsoid_volume");
  return std::pow(2.0 * M_PI, static_cast<double>(s.size())) * polytope_volume(s, t);
}

double face_volume(const std::vector<double>& s, double t) {
  check_frequencies(s, "face_volume");
  if (t < 0.0) throw ValidationError("face_volume: t must be nonnegative");
  return norm2(s) * std::pow(t, static_cast<double>(s.size() - 1)) /
         (factorial_double(s.size() - 1) * abs_product(s));
}

double surface_integral(const std::vector<double>& s, double t) {
  check_frequencies(s, "surface_integral");
  return std::pow(2.0 * M_PI, static_cast<double>(s.size())) * face_volume(s, t) / norm2(s);
}

WeylEstimate weyl_estimate(const RationalFrequencies& rf, const Rational& hbar,
                           const Rational& r) {
  if (!rf.all_negative()) throw NotDiscreteBelow("weyl_estimate: frequencies must be negative");
  const auto eh = combinatorics::ehrhart_polynomial(rf.p, rf.q_lcm);
  return estimate_at(rf, second_term_data(rf, eh), hbar, r);
}

WeylEstimate weyl_estimate(const LieAlgebraElement& A, const RationalFrequencies& rf, double hbar,
                           double r) {
  std::vector<double> reconstructed = rf.frequencies_double();
  std::sort(reconstructed.begin(), reconstructed.end());
  for (std::size_t j = 0; j < A.d; ++j) {
    if (rf.dim() != A.d || std::abs(reconstructed[j] - A.frequencies[j]) > 1e-8)
      throw InconsistentExactData("weyl_estimate: rational data does not match the element");
  }
  return weyl_estimate(rf, rational_from_double(hbar), rational_from_double(r));
}

RemainderScan remainder_scan(const RationalFrequencies& rf, const Rational& hbar, int k_max) {
  if (!rf.all_negative()) throw NotDiscreteBelow("remainder_scan: frequencies must be negative");
  if (k_max < 1) throw ValidationError("remainder_scan: k_max must be >= 1");

  const auto eh = combinatorics::ehrhart_polynomial(rf.p, rf.q_lcm);
  const auto data = second_term_data(rf, eh);
  const std::size_t d = rf.dim();

  RemainderScan scan;
  scan.d = d;
  scan.hbar = to_double(hbar);
  for (int k = 1; k <= k_max; ++k) {
    const Rational u = Rational(k) * data.qx + data.e0;
    const Rational r = hbar * u;
    WeylEstimate est = estimate_at(rf, data, hbar, r);
    const double ud = to_double(u);
    const double scale = std::pow(ud, static_cast<double>(d) - 2.0);
    scan.grid_k.push_back(Integer(k));
    scan.grid_r.push_back(est.r);
    scan.grid_u.push_back(ud);
    scan.exact.push_back(est.exact);
    scan.leading.push_back(est.leading);
    scan.second_paper.push_back(est.second_paper);
    scan.second_lattice.push_back(est.second_lattice);
    scan.remainder_paper.push_back(est.remainder_paper);
    scan.remainder_lattice.push_back(est.remainder_lattice);
    scan.normalized_paper.push_back(est.remainder_paper / scale);
    scan.normalized_lattice.push_back(est.remainder_lattice / scale);
    scan.sup_normalized_paper =
        std::max(scan.sup_normalized_paper, std::abs(scan.normalized_paper.back()));
    scan.sup_normalized_lattice =
        std::max(scan.sup_normalized_lattice, std::abs(scan.normalized_lattice.back()));
  }
  return scan;
}

RemainderScan remainder_scan(const LieAlgebraElement& A, const RationalFrequencies& rf,
                             double hbar, int k_max) {
  std::vector<double> reconstructed = rf.frequencies_double();
  std::sort(reconstructed.begin(), reconstructed.end());
  for (std::size_t j = 0; j < A.d; ++j) {
    if (rf.dim() != A.d || std::abs(reconstructed[j] - A.frequencies[j]) > 1e-8)
      throw InconsistentExactData("remainder_scan: rational data does not match the element");
  }
  return remainder_scan(rf, rational_from_double(hbar), k_max);
}

bool hbar_rescale_check(const RationalFrequencies& rf, const Rational& E0, const Rational& hbar,
                        const Rational& r) {
  if (!rf.all_negative())
    throw NotDiscreteBelow("hbar_rescale_check: frequencies must be negative");
  if (!(hbar > 0)) throw ValidationError("hbar_rescale_check: hbar must be positive");

  // Route one: count the hbar-scaled spectrum directly.
  std::vector<Integer> parts;
  for (const Integer& pj : rf.p) parts.push_back(-pj);
  Integer direct = 0;
  if (r >= hbar * E0) {
    const Integer K = floor_rational((r - hbar * E0) / (hbar * rf.x));
    const std::vector<Integer> table =
        combinatorics::denumerant_table(parts, K.convert_to<std::size_t>());
    for (const Integer& v : table) direct += v;
  }
  // Route two: unscaled count at r/hbar.
  const Integer rescaled = combinatorics::counting_function(rf, E0, r / hbar);
  return direct == rescaled;
}

void write_csv(std::ostream& out, const RemainderScan& scan) {
  out << "k,r,exact,leading,second_paper,second_lattice,remainder_paper,remainder_lattice\n";
  char buffer[512];
  for (std::size_t i = 0; i < scan.grid_k.size(); ++i) {
    std::snprintf(buffer, sizeof(buffer), "%s,%.17g,%s,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  scan.grid_k[i].str().c_str(), scan.grid_r[i], scan.exact[i].str().c_str(),
                  scan.leading[i], scan.second_paper[i], scan.second_lattice[i],
                  scan.remainder_paper[i], scan.remainder_lattice[i]);
    out << buffer;
  }
}

}  // namespace metaspec::asymptotics
