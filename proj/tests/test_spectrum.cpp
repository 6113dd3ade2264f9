#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "metaspec/fock.hpp"
#include "metaspec/spectrum.hpp"
#include "support/oracles.hpp"

using namespace metaspec;
using linalg::Complex;
using linalg::RealMatrix;
using spectrum::RationalFrequencies;

namespace {

symbols::LieAlgebraElement harmonic(std::size_t d) {
  return symbols::from_blocks(RealMatrix(d), RealMatrix::identity(d));
}

symbols::LieAlgebraElement angular_momentum() {
  RealMatrix b(2);
  b(0, 1) = 1.0;
  b(1, 0) = -1.0;
  return symbols::from_blocks(b, RealMatrix(2));
}

symbols::LieAlgebraElement diagonal_element(const std::vector<Rational>& s) {
  RealMatrix c(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) c(j, j) = -to_double(s[j]);
  return symbols::from_blocks(RealMatrix(s.size()), c);
}

}  // namespace

TEST_CASE("rationalize: common-denominator structure") {
  auto rf = spectrum::rationalize({-0.5, -1.0 / 3.0}, 1000000, 1e-10);
  CHECK(rf.x == Rational(1, 6));
  CHECK(rf.p[0] == -3);
  CHECK(rf.p[1] == -2);
  CHECK(rf.g == 1);
  CHECK(rf.q_lcm == 6);

  auto ones = spectrum::rationalize({-1.0, -1.0}, 1000000, 1e-10);
  CHECK(ones.x == Rational(1));
  CHECK(ones.p[0] == -1);
  CHECK(ones.p[1] == -1);
  CHECK(ones.q_lcm == 1);
}

TEST_CASE("rationalize: irrational ratio fails at tight tolerance") {
  CHECK_THROWS_AS(spectrum::rationalize({-1.0, -std::sqrt(2.0)}, 1000000, 1e-12),
                  ReconstructionFailed);
  try {
    spectrum::rationalize({-1.0, -std::sqrt(2.0)}, 1000000, 1e-12);
  } catch (const ReconstructionFailed& e) {
    CHECK(e.worst_residual > 0.0);
    CHECK(e.worst_residual < 1e-6);
  }
}

TEST_CASE("from_exact normalizes the scale") {
  auto rf = RationalFrequencies::from_exact({Rational(-1, 2), Rational(-1, 3)});
  CHECK(rf.x == Rational(1, 6));
  CHECK(rf.frequency(0) == Rational(-1, 2));
  CHECK(rf.ground_shift() == Rational(5, 12));

  auto zero = RationalFrequencies::from_exact({Rational(0), Rational(0)});
  CHECK(zero.g == 0);
  CHECK(zero.p[0] == 0);
}

TEST_CASE("classify: discrete cases and the dense heuristic") {
  auto h3 = harmonic(3);
  auto rf = RationalFrequencies::from_exact({Rational(-1), Rational(-1), Rational(-1)});
  auto cls = spectrum::classify(h3, rf);
  CHECK(cls.kind == spectrum::SpectrumKind::UniformlyDiscrete);
  CHECK(*cls.generator == Rational(1));
  CHECK_FALSE(cls.heuristic);

  auto ang = angular_momentum();
  auto cls2 = spectrum::classify(ang, spectrum::NumericMode{});
  CHECK(cls2.kind == spectrum::SpectrumKind::UniformlyDiscrete);
  CHECK(*cls2.generator == Rational(1));
  CHECK(cls2.heuristic);

  auto dense = diagonal_element({Rational(-1), rational_from_double(-std::sqrt(2.0))});
  spectrum::NumericMode tight;
  tight.tol = 1e-12;
  auto cls3 = spectrum::classify(dense, tight);
  CHECK(cls3.kind == spectrum::SpectrumKind::Dense);
  CHECK(cls3.heuristic);

  // Exact data that does not match the element is rejected.
  CHECK_THROWS_AS(spectrum::classify(h3, RationalFrequencies::from_exact(
                                              {Rational(-1), Rational(-1), Rational(-2)})),
                  InconsistentExactData);
}

TEST_CASE("enumerate: oscillator d=2 below 4.5") {
  auto A = harmonic(2);
  auto rf = RationalFrequencies::from_exact({Rational(-1), Rational(-1)});
  auto sp = spectrum::enumerate_point_spectrum(A, rf, 4.5);
  CHECK(sp.complete);
  REQUIRE(sp.eigenvalues.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(sp.eigenvalues[k].value == Rational(Integer(k + 1)));
    CHECK(sp.eigenvalues[k].multiplicity == Integer(k + 1));
    CHECK_FALSE(sp.eigenvalues[k].infinite_multiplicity);
  }
}

TEST_CASE("enumerate: frequencies (-1, -2) below 5") {
  // Oracle: brute-force enumeration of n1 + 2 n2 <= 3.
  auto A = diagonal_element({Rational(-1), Rational(-2)});
  auto rf = RationalFrequencies::from_exact({Rational(-1), Rational(-2)});
  auto sp = spectrum::enumerate_point_spectrum(A, rf, 5.0);
  CHECK(sp.complete);
  REQUIRE(sp.eigenvalues.size() == 4);
  const std::vector<std::pair<Rational, int>> expected = {
      {Rational(3, 2), 1}, {Rational(5, 2), 1}, {Rational(7, 2), 2}, {Rational(9, 2), 2}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(sp.eigenvalues[i].value == expected[i].first);
    CHECK(sp.eigenvalues[i].multiplicity == Integer(expected[i].second));
  }
}

TEST_CASE("enumerate: mixed signs give an incomplete window of infinite multiplicity") {
  auto A = angular_momentum();
  auto rf = RationalFrequencies::from_exact({Rational(-1), Rational(1)});
  auto sp = spectrum::enumerate_point_spectrum(A, rf, 3.5, 10);
  CHECK_FALSE(sp.complete);
  // Eigenvalues are the integers in [-10, 3].
  REQUIRE(sp.eigenvalues.size() == 14);
  CHECK(sp.eigenvalues.front().value == Rational(-10));
  CHECK(sp.eigenvalues.back().value == Rational(3));
  for (const auto& e : sp.eigenvalues) CHECK(e.infinite_multiplicity);
}

TEST_CASE("enumerate: mismatched rational data is rejected") {
  auto A = harmonic(2);
  auto rf = RationalFrequencies::from_exact({Rational(-1), Rational(-2)});
  CHECK_THROWS_AS(spectrum::enumerate_point_spectrum(A, rf, 4.5), NotDiscrete);
}

TEST_CASE("enumerate properties: generator differences and scale equivariance") {
  auto rf = RationalFrequencies::from_exact({Rational(-1, 2), Rational(-1, 3)});
  auto A = diagonal_element({Rational(-1, 2), Rational(-1, 3)});
  auto sp = spectrum::enumerate_point_spectrum(A, rf, 4.0);
  const Rational gen = Rational(rf.g) * rf.x;
  bool some_pair_achieves = false;
  for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i) {
    for (std::size_t j = i + 1; j < sp.eigenvalues.size(); ++j) {
      const Rational diff = sp.eigenvalues[j].value - sp.eigenvalues[i].value;
      CHECK(is_integer(diff / gen));
      if (diff == gen) some_pair_achieves = true;
    }
  }
  CHECK(some_pair_achieves);

  // Scaling the frequencies by c > 0 scales the offsets above E_0 by c.
  const Rational c(3, 2);
  auto scaled = RationalFrequencies::from_exact({Rational(-3, 4), Rational(-1, 2)});
  auto As = diagonal_element({Rational(-3, 4), Rational(-1, 2)});
  auto sps = spectrum::enumerate_point_spectrum(As, scaled, 4.0);
  const Rational e0 = rf.ground_shift();
  const Rational e0s = scaled.ground_shift();
  for (std::size_t i = 0; i < std::min(sp.eigenvalues.size(), sps.eigenvalues.size()); ++i) {
    CHECK(sps.eigenvalues[i].value - e0s == c * (sp.eigenvalues[i].value - e0));
    CHECK(sps.eigenvalues[i].multiplicity == sp.eigenvalues[i].multiplicity);
  }
}

TEST_CASE("mu: Fourier case gives the fourth roots of unity") {
  auto mu = spectrum::mu_spectrum_from_angles({Rational(-1, 4), Rational(-1, 4)});
  CHECK(mu.kind == spectrum::MuKind::FiniteGroup);
  CHECK(mu.q == 4);
  CHECK(mu.p == 1);
  REQUIRE(mu.elements.has_value());
  REQUIRE(mu.elements->size() == 4);
  for (const Complex expected : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
    bool found = false;
    for (const Complex& e : *mu.elements) found = found || std::abs(e - expected) < 1e-12;
    CHECK(found);
  }
  CHECK(std::abs(mu.phase_branches.first + mu.phase_branches.second) < 1e-15);
  // Both phase branches square to det(g)^{-1} = -1.
  const Complex sq = mu.phase_branches.first * mu.phase_branches.first;
  CHECK(std::abs(sq - Complex(-1, 0)) < 1e-12);
}

TEST_CASE("mu: (1/2, 1/3) generates the sixth roots of unity") {
  auto mu = spectrum::mu_spectrum_from_angles({Rational(1, 2), Rational(1, 3)});
  CHECK(mu.q == 6);
  CHECK(mu.p == 1);
  REQUIRE(mu.elements->size() == 6);

  // Oracle: brute-force closure of the conjugate powers.
  auto closure = testsupport::closure_angles({0.5, 1.0 / 3.0});
  REQUIRE(closure.size() == 6);
  std::vector<double> impl;
  for (const Complex& e : *mu.elements) {
    double a = std::arg(e / mu.phase_branches.first);
    if (a < 0) a += 2.0 * M_PI;
    if (a >= 2.0 * M_PI - 1e-9) a = 0.0;
    impl.push_back(a);
  }
  std::sort(impl.begin(), impl.end());
  for (std::size_t i = 0; i < 6; ++i) CHECK(impl[i] == doctest::Approx(closure[i]).epsilon(1e-9));
}

TEST_CASE("mu: brute-force equivalence over small exact angles") {
  std::vector<Rational> fractions;
  for (int q = 1; q <= 5; ++q)
    for (int p = 0; p < q; ++p)
      if ((p == 0 && q == 1) || std::gcd(p, q) == 1) fractions.emplace_back(p, q);

  for (const Rational& a : fractions) {
    for (const Rational& b : fractions) {
      auto mu = spectrum::mu_spectrum_from_angles({a, b});
      auto closure = testsupport::closure_angles({to_double(a), to_double(b)});
      REQUIRE(mu.elements->size() == closure.size());
      std::vector<double> impl;
      for (const Complex& e : *mu.elements) {
        double ang = std::arg(e / mu.phase_branches.first);
        if (ang < 0) ang += 2.0 * M_PI;
        if (ang >= 2.0 * M_PI - 1e-9) ang = 0.0;
        impl.push_back(ang);
      }
      std::sort(impl.begin(), impl.end());
      for (std::size_t i = 0; i < impl.size(); ++i)
        CHECK(std::abs(impl[i] - closure[i]) < 1e-9);
    }
  }
}

TEST_CASE("mu elements form a group after dividing out the phase") {
  auto mu = spectrum::mu_spectrum_from_angles({Rational(1, 4), Rational(1, 6)});
  const Complex phase = mu.phase_branches.first;
  std::vector<Complex> bare;
  for (const Complex& e : *mu.elements) bare.push_back(e / phase);
  for (const Complex& a : bare) {
    for (const Complex& b : bare) {
      bool found = false;
      for (const Complex& c : bare) found = found || std::abs(a * b - c) < 1e-9;
      CHECK(found);
    }
  }
}

TEST_CASE("mu: numeric reconstruction and the full-circle fallback") {
  // Rational rotation, numerically.
  std::mt19937_64 rng(3);
  auto u = testsupport::random_unitary(2, rng);
  linalg::ComplexMatrix diag(2);
  diag(0, 0) = Complex(std::cos(M_PI / 2), std::sin(M_PI / 2));
  diag(1, 1) = Complex(std::cos(M_PI / 3), std::sin(M_PI / 3));
  auto g = u * diag * u.adjoint();
  auto mu = spectrum::mu_point_spectrum(g, spectrum::NumericMode{});
  CHECK(mu.kind == spectrum::MuKind::FiniteGroup);
  CHECK(mu.q == 12);

  // Golden-ratio angle defeats reconstruction at a tight tolerance.
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  linalg::ComplexMatrix irr(2);
  irr(0, 0) = Complex(std::cos(2 * M_PI * golden), std::sin(2 * M_PI * golden));
  irr(1, 1) = Complex(0.0, 1.0);
  spectrum::NumericMode mode;
  mode.max_denominator = 10000;
  mode.tol = 1e-10;
  auto full = spectrum::mu_point_spectrum(irr, mode);
  CHECK(full.kind == spectrum::MuKind::FullCircle);
  CHECK_FALSE(full.elements.has_value());

  // Checked exact mode: consistent angles pass, wrong ones throw.
  auto checked = spectrum::mu_point_spectrum(g, {Rational(1, 4), Rational(1, 6)});
  CHECK(checked.q == 12);
  CHECK_THROWS_AS(spectrum::mu_point_spectrum(g, {Rational(1, 4), Rational(1, 5)}),
                  AngleInconsistent);
  CHECK_THROWS_AS(spectrum::mu_point_spectrum(
                      Complex(2.0, 0.0) * linalg::ComplexMatrix::identity(2),
                      spectrum::NumericMode{}),
                  NotUnitary);
}

TEST_CASE("enumerated spectrum equals the union of Fock block spectra") {
  for (const auto& freqs :
       {std::vector<Rational>{Rational(-1), Rational(-1)},
        std::vector<Rational>{Rational(-1), Rational(-2)},
        std::vector<Rational>{Rational(-1), Rational(-2), Rational(-3)}}) {
    auto A = diagonal_element(freqs);
    auto rf = RationalFrequencies::from_exact(freqs);
    const double cutoff = 8.0;
    auto sp = spectrum::enumerate_point_spectrum(A, rf, cutoff);

    double min_abs = 1e9;
    for (const Rational& s : freqs) min_abs = std::min(min_abs, std::abs(to_double(s)));
    const int k_max =
        static_cast<int>(std::ceil((cutoff - to_double(rf.ground_shift())) / min_abs));

    std::vector<double> from_blocks;
    for (int k = 0; k <= k_max; ++k) {
      auto block = fock::block_matrix_hamiltonian(A, k);
      auto herm = block.similarity_transformed();
      auto eig = linalg::hermitian_eigendecomposition(herm, 1e-8);
      for (const Complex& v : eig.values) {
        if (v.real() <= cutoff + 1e-9) from_blocks.push_back(v.real());
      }
    }
    std::sort(from_blocks.begin(), from_blocks.end());

    std::vector<double> from_enum;
    for (const auto& e : sp.eigenvalues) {
      const double v = to_double(e.value);
      for (Integer m = 0; m < e.multiplicity; ++m) from_enum.push_back(v);
    }
    REQUIRE(from_enum.size() == from_blocks.size());
    for (std::size_t i = 0; i < from_enum.size(); ++i)
      CHECK(std::abs(from_enum[i] - from_blocks[i]) < 1e-8);
  }
}
