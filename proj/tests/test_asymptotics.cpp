#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "metaspec/asymptotics.hpp"
#include "support/oracles.hpp"

using namespace metaspec;
using spectrum::RationalFrequencies;

namespace {

RationalFrequencies rf_from(std::initializer_list<long> values) {
  std::vector<Rational> s;
  for (long v : values) s.emplace_back(v);
  return RationalFrequencies::from_exact(s);
}

}  // namespace

TEST_CASE("volumes: closed forms") {
  CHECK(asymptotics::polytope_volume({-1, -1}, 1.0) == doctest::Approx(0.5));
  CHECK(asymptotics::polytope_volume({-1, -2}, 2.0) == doctest::Approx(1.0));
  CHECK(asymptotics::polytope_volume({-1, -1}, 0.0) == 0.0);

  // Ball volume oracle: {|w|^2 <= 2t} in R^4 has volume pi^2 (2t)^2 / 2.
  CHECK(asymptotics::ellipsoid_volume({-1, -1}, 1.0) ==
        doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-12));
  CHECK(asymptotics::ellipsoid_volume({-1}, 1.0) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));

  CHECK(asymptotics::face_volume({-1, -1}, 1.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(asymptotics::face_volume({-1, -2}, 2.0) == doctest::Approx(std::sqrt(5.0)));
  CHECK(asymptotics::face_volume({-1}, 7.0) == doctest::Approx(1.0));  // a point

  CHECK(asymptotics::surface_integral({-1, -1}, 1.0) ==
        doctest::Approx(4.0 * M_PI * M_PI).epsilon(1e-12));
  CHECK(asymptotics::surface_integral({-1}, 1.0) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));

  CHECK_THROWS_AS(asymptotics::polytope_volume({-1.0, 0.0}, 1.0), ZeroFrequency);
}

TEST_CASE("volumes: homogeneity of the face volume") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> freq(-3.0, -0.2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> s(1 + trial % 4);
    for (double& v : s) v = freq(rng);
    const double base = asymptotics::face_volume(s, 1.0);
    for (double t : {0.5, 2.0, 3.7}) {
      const double expected = base * std::pow(t, static_cast<double>(s.size()) - 1.0);
      CHECK(asymptotics::face_volume(s, t) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("weyl_estimate: oscillator d=2 at r=100") {
  auto rf = rf_from({-1, -1});
  auto est = asymptotics::weyl_estimate(rf, Rational(1), Rational(100));
  CHECK(est.exact == 5050);
  CHECK(est.leading == doctest::Approx(5000.0).epsilon(1e-14));
  CHECK(est.total_lattice == doctest::Approx(5050.0).epsilon(1e-14));
  CHECK(est.remainder_lattice == 0.0);
  CHECK(est.second_paper == doctest::Approx(100.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(est.remainder_paper == doctest::Approx(50.0 - 100.0 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("weyl_estimate: hbar homogeneity of the leading term") {
  auto rf = rf_from({-1, -2});
  auto scaled = asymptotics::weyl_estimate(rf, Rational(1, 2), Rational(10));
  auto unscaled = asymptotics::weyl_estimate(rf, Rational(1), Rational(20));
  CHECK(scaled.leading == unscaled.leading);
  CHECK(scaled.second_lattice == unscaled.second_lattice);
  CHECK(scaled.exact == unscaled.exact);
}

TEST_CASE("remainder_scan: oscillator remainder vanishes on the aligned grid") {
  auto rf = rf_from({-1, -1});
  auto scan = asymptotics::remainder_scan(rf, Rational(1), 200);
  CHECK(scan.sup_normalized_lattice == 0.0);
  for (double r : scan.remainder_lattice) CHECK(r == 0.0);
}

TEST_CASE("remainder_scan: lattice variant bounded, paper variant diverges at order d-2") {
  auto rf12 = rf_from({-1, -2});
  auto scan12 = asymptotics::remainder_scan(rf12, Rational(1), 200);
  CHECK(scan12.sup_normalized_lattice <= 2.0);
  // Exact constant remainder 1/16 for this family.
  for (double r : scan12.remainder_lattice)
    CHECK(r == doctest::Approx(1.0 / 16.0).epsilon(1e-12));

  auto rf3 = rf_from({-1, -1, -1});
  auto scan3 = asymptotics::remainder_scan(rf3, Rational(1), 100);
  CHECK(scan3.sup_normalized_lattice <= 1.0);

  // Euclidean surface term: remainder/u^{d-2} grows, remainder/u^{d-1} settles
  // at 1/2 - 1/sqrt(2).
  auto rf11 = rf_from({-1, -1});
  auto scan11 = asymptotics::remainder_scan(rf11, Rational(1), 200);
  const double early = std::abs(scan11.normalized_paper.front());
  const double late = std::abs(scan11.normalized_paper.back());
  CHECK(late > 10.0 * early);
  CHECK(late > 5.0);
  const double slope = scan11.remainder_paper.back() / scan11.grid_u.back();
  CHECK(slope == doctest::Approx(0.5 - 1.0 / std::sqrt(2.0)).epsilon(1e-6));
  CHECK(scan11.sup_normalized_lattice <= 1e-12);
}

TEST_CASE("remainder_scan grid is aligned for every hbar") {
  auto rf = rf_from({-1, -2, -3});
  for (const Rational& hbar : {Rational(1), Rational(1, 2), Rational(1, 10)}) {
    auto scan = asymptotics::remainder_scan(rf, hbar, 25);
    const Rational e0 = rf.ground_shift();
    const Rational qx = Rational(rf.q_lcm) * rf.x;
    for (std::size_t i = 0; i < scan.grid_r.size(); ++i) {
      const Rational u = rational_from_double(scan.grid_u[i]);
      CHECK(is_integer((u - e0) / qx));
    }
  }
}

TEST_CASE("hbar_rescale_check: worked example and random rational pairs") {
  auto rf = rf_from({-1, -1});
  // N^{1/2}(5) = N(10) = 55.
  CHECK(asymptotics::hbar_rescale_check(rf, rf.ground_shift(), Rational(1, 2), Rational(5)));
  CHECK(combinatorics::counting_function(rf, rf.ground_shift(), Rational(10)) == 55);
  CHECK(asymptotics::hbar_rescale_check(rf, rf.ground_shift(), Rational(1), Rational(7)));
  CHECK(asymptotics::hbar_rescale_check(rf, rf.ground_shift(), Rational(3), Rational(1, 2)));

  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> small(1, 12);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational hbar(small(rng), small(rng));
    const Rational r(small(rng) * small(rng), small(rng));
    CHECK(asymptotics::hbar_rescale_check(rf, rf.ground_shift(), hbar, r));
  }
}

TEST_CASE("coarea identities by central differences") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> freq(-3.0, -0.3);
  std::uniform_real_distribution<double> tval(0.5, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> s(1 + trial % 4);
    for (double& v : s) v = freq(rng);
    double norm = 0.0;
    for (double v : s) norm += v * v;
    norm = std::sqrt(norm);
    const double t = tval(rng);
    const double h = 1e-5;

    const double dpoly = (asymptotics::polytope_volume(s, t + h) -
                          asymptotics::polytope_volume(s, t - h)) /
                         (2 * h);
    const double face = asymptotics::face_volume(s, t);
    CHECK(std::abs(dpoly * norm - face) <= 1e-6 * std::max(1.0, std::abs(face)));

    const double dell = (asymptotics::ellipsoid_volume(s, t + h) -
                         asymptotics::ellipsoid_volume(s, t - h)) /
                        (2 * h);
    const double surf = asymptotics::surface_integral(s, t);
    CHECK(std::abs(dell - surf) <= 1e-6 * std::max(1.0, std::abs(surf)));
  }
}

TEST_CASE("symbol sublevel volume agrees with the ellipsoid volume (Monte Carlo)") {
  std::mt19937_64 rng(2718);
  auto A = testsupport::random_u_element(2, rng);
  // The sublevel set is bounded only for definite symbols; shifting C by a
  // multiple of the identity pushes every frequency below -1/2.
  {
    const double shift = A.frequencies.back() + 0.5;
    linalg::RealMatrix c = A.C;
    for (std::size_t i = 0; i < 2; ++i) c(i, i) += shift;
    A = symbols::from_blocks(A.B, c);
  }
  double min_abs = 1e9;
  for (double v : A.frequencies) min_abs = std::min(min_abs, std::abs(v));
  REQUIRE(A.frequencies.back() < 0.0);
  const double t = 1.0;
  const double radius = std::sqrt(2.0 * t / min_abs);
  const int samples = 200000;
  std::uniform_real_distribution<double> box(-radius, radius);
  long long inside = 0;
  std::vector<double> x(2), xi(2);
  for (int i = 0; i < samples; ++i) {
    for (int j = 0; j < 2; ++j) {
      x[j] = box(rng);
      xi[j] = box(rng);
    }
    if (symbols::symbol_eval(A, x, xi) <= t) ++inside;
  }
  const double cube = std::pow(2.0 * radius, 4.0);
  const double fraction = static_cast<double>(inside) / samples;
  const double estimate = cube * fraction;
  const double sigma = cube * std::sqrt(fraction * (1.0 - fraction) / samples);
  CHECK(std::abs(estimate - asymptotics::ellipsoid_volume(A.frequencies, t)) <= 3.0 * sigma);
}

TEST_CASE("csv emitter shape") {
  auto rf = rf_from({-1, -1});
  auto scan = asymptotics::remainder_scan(rf, Rational(1), 3);
  std::ostringstream out;
  asymptotics::write_csv(out, scan);
  const std::string text = out.str();
  CHECK(text.rfind("k,r,exact,leading,second_paper,second_lattice,remainder_paper,"
                   "remainder_lattice\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);  // header + 3 rows
}

TEST_CASE("weyl_estimate rejects mixed signs") {
  auto mixed = rf_from({-1, 1});
  CHECK_THROWS_AS(asymptotics::weyl_estimate(mixed, Rational(1), Rational(5)), NotDiscreteBelow);
  CHECK_THROWS_AS(asymptotics::remainder_scan(mixed, Rational(1), 5), NotDiscreteBelow);
}
