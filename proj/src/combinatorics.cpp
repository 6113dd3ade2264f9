#include "metaspec/combinatorics.hpp"

#include <algorithm>
#include <cmath>

namespace metaspec::combinatorics {

namespace {

constexpr std::size_t kMaxDpIndex = 100'000'000;

std::size_t to_index(const Integer& k, const char* where) {
  if (k < 0) throw ValidationError(std::string(where) + ": negative index");
  if (k > Integer(kMaxDpIndex)) throw ValidationError(std::string(where) + ": index too large");
  return k.convert_to<std::size_t>();
}

std::vector<std::size_t> coin_values(const std::vector<Integer>& p, const char* where) {
  if (p.empty()) throw ValidationError(std::string(where) + ": empty part list");
  std::vector<std::size_t> coins;
  coins.reserve(p.size());
  for (const Integer& v : p) {
    if (v < 1) throw ValidationError(std::string(where) + ": parts must be >= 1");
    coins.push_back(to_index(v, where));
  }
  return coins;
}

// Reachability of sums n_1 c_1 + ... + n_m c_m up to `bound`, n unbounded.
std::vector<char> reachable_sums(const std::vector<std::size_t>& coins, std::size_t bound) {
  std::vector<char> reach(bound + 1, 0);
  reach[0] = 1;
  for (std::size_t c : coins) {
    for (std::size_t m = c; m <= bound; ++m) {
      if (reach[m - c]) reach[m] = 1;
    }
  }
  return reach;
}

}  // namespace

std::vector<Integer> denumerant_table(const std::vector<Integer>& p, std::size_t k_max) {
  const auto coins = coin_values(p, "denumerant");
  std::vector<Integer> table(k_max + 1, Integer(0));
  table[0] = 1;
  for (std::size_t c : coins) {
    for (std::size_t m = c; m <= k_max; ++m) table[m] += table[m - c];
  }
  return table;
}

Integer denumerant(const std::vector<Integer>& p, const Integer& k) {
  const std::size_t kk = to_index(k, "denumerant");
  return denumerant_table(p, kk)[kk];
}

MultiplicityResult multiplicity(const RationalFrequencies& rf, const Rational& lambda) {
  const Rational e0 = rf.ground_shift();
  const Rational t = (lambda - e0) / rf.x;
  if (!is_integer(t)) return {MultiplicityResult::Kind::NotAnEigenvalue, 0};
  const Integer target = -rational_num(t);  // sum n_j p_j must equal `target`

  std::vector<Integer> positives;
  std::vector<Integer> negatives_abs;
  for (const Integer& pj : rf.p) {
    if (pj > 0) positives.push_back(pj);
    if (pj < 0) negatives_abs.push_back(-pj);
  }
  const bool has_zero = rf.has_zero();

  if (positives.empty() && negatives_abs.empty()) {
    // A = 0: the spectrum is {E_0} with every n admissible.
    if (target == 0) return {MultiplicityResult::Kind::Infinite, 0};
    return {MultiplicityResult::Kind::NotAnEigenvalue, 0};
  }

  if (positives.empty() || negatives_abs.empty()) {
    // Same sign. k = |target| on the correct side, else not an eigenvalue.
    const std::vector<Integer>& parts = positives.empty() ? negatives_abs : positives;
    const Integer k = positives.empty() ? Integer(-target) : target;
    if (k < 0) return {MultiplicityResult::Kind::NotAnEigenvalue, 0};
    const Integer cnt = denumerant(parts, k);
    if (has_zero) {
      if (cnt > 0) return {MultiplicityResult::Kind::Infinite, 0};
      return {MultiplicityResult::Kind::NotAnEigenvalue, 0};
    }
    return {MultiplicityResult::Kind::Finite, cnt};
  }

  // Mixed signs: every representable value has infinitely many
  // representations. Decide membership by a bounded search: find W reachable
  // from the negative parts with target + W reachable from the positive
  // parts. The bound clears the Frobenius range of both part sets plus one
  // full congruence cycle.
  Integer max_part = 0;
  for (const Integer& pj : rf.p) max_part = std::max(max_part, Integer(abs(pj)));
  const Integer bound_int = abs(target) + 2 * (max_part * max_part + max_part) + 4;
  const std::size_t bound = to_index(bound_int, "multiplicity");

  const auto coins_neg = coin_values(negatives_abs, "multiplicity");
  const auto coins_pos = coin_values(positives, "multiplicity");
  const std::vector<char> reach_neg = reachable_sums(coins_neg, bound);
  const std::size_t pos_bound = bound + (target > 0 ? to_index(target, "multiplicity") : 0);
  const std::vector<char> reach_pos = reachable_sums(coins_pos, pos_bound);

  for (std::size_t w = 0; w <= bound; ++w) {
    if (!reach_neg[w]) continue;
    const Integer v = target + Integer(w);
    if (v < 0 || v > Integer(pos_bound)) continue;
    if (reach_pos[v.convert_to<std::size_t>()])
      return {MultiplicityResult::Kind::Infinite, 0};
  }
  return {MultiplicityResult::Kind::NotAnEigenvalue, 0};
}

std::vector<Rational> interpolate_polynomial(const std::vector<Rational>& points,
                                             const std::vector<Rational>& values) {
  if (points.size() != values.size() || points.empty())
    throw ValidationError("interpolate_polynomial: bad point set");
  const std::size_t n = points.size();

  // Newton divided differences, then expansion to the monomial basis.
  std::vector<Rational> divided = values;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      divided[i] = (divided[i] - divided[i - 1]) / (points[i] - points[i - level]);
      if (i == level) break;
    }
  }

  std::vector<Rational> coeffs(n, Rational(0));
  std::vector<Rational> basis(n, Rational(0));  // prod (x - points[j]) so far
  basis[0] = 1;
  std::size_t basis_len = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < basis_len; ++j) coeffs[j] += divided[i] * basis[j];
    if (i + 1 < n) {
      // basis <- basis * (x - points[i])
      for (std::size_t j = basis_len; j > 0; --j) basis[j] = basis[j - 1];
      basis[0] = 0;
      ++basis_len;
      for (std::size_t j = 0; j + 1 < basis_len; ++j) basis[j] -= points[i] * basis[j + 1];
    }
  }
  return coeffs;
}

Rational evaluate_polynomial(const std::vector<Rational>& coefficients, const Rational& at) {
  Rational acc = 0;
  for (std::size_t j = coefficients.size(); j > 0; --j) acc = acc * at + coefficients[j - 1];
  return acc;
}

Rational QuasiPolynomial::evaluate(const Integer& k) const {
  if (k < 0) throw ValidationError("QuasiPolynomial::evaluate: negative argument");
  const std::size_t cls = (k % Integer(period)).convert_to<std::size_t>();
  return evaluate_polynomial(classes[cls], Rational(k));
}

QuasiPolynomial quasi_polynomial_fit(const std::vector<Integer>& p, std::size_t k_window) {
  coin_values(p, "quasi_polynomial_fit");
  const std::size_t d = p.size();
  Integer lcm_p = 1;
  for (const Integer& v : p) lcm_p = lcm(lcm_p, v);
  const std::size_t period_bound = to_index(lcm_p, "quasi_polynomial_fit");
  if (k_window < 2 * d * period_bound)
    throw ValidationError("quasi_polynomial_fit: window too small (need 2*d*lcm(p))");

  const std::vector<Integer> table = denumerant_table(p, k_window);

  std::vector<std::size_t> divisors;
  for (std::size_t m = 1; m <= period_bound; ++m) {
    if (period_bound % m == 0) divisors.push_back(m);
  }

  for (std::size_t period : divisors) {
    std::vector<std::vector<Rational>> classes(period);
    bool ok = true;
    for (std::size_t residue = 0; residue < period && ok; ++residue) {
      std::vector<Rational> xs;
      std::vector<Rational> ys;
      for (std::size_t k = residue; k <= k_window && xs.size() < d; k += period) {
        xs.emplace_back(Integer(k));
        ys.emplace_back(table[k]);
      }
      std::vector<Rational> coeffs = interpolate_polynomial(xs, ys);
      coeffs.resize(d, Rational(0));  // pad to degree d-1
      for (std::size_t k = residue; k <= k_window; k += period) {
        if (evaluate_polynomial(coeffs, Rational(Integer(k))) != Rational(table[k])) {
          ok = false;
          break;
        }
      }
      classes[residue] = std::move(coeffs);
    }
    if (ok) {
      QuasiPolynomial result;
      result.degree = d - 1;
      result.period = period;
      result.classes = std::move(classes);
      return result;
    }
  }
  throw NoExactFit("quasi_polynomial_fit: no divisor of lcm(p) admits an exact fit");
}

namespace {

std::vector<Integer> absolute_parts(const std::vector<Integer>& p, const char* where) {
  if (p.empty()) throw ValidationError(std::string(where) + ": empty part list");
  std::vector<Integer> parts;
  parts.reserve(p.size());
  for (const Integer& v : p) {
    if (v >= 0) throw ValidationError(std::string(where) + ": parts must be negative");
    parts.push_back(-v);
  }
  return parts;
}

Integer cumulative_denumerant(const std::vector<Integer>& parts, const Integer& bound) {
  if (bound < 0) return 0;
  const std::size_t b = to_index(bound, "cumulative_denumerant");
  const std::vector<Integer> table = denumerant_table(parts, b);
  Integer total = 0;
  for (const Integer& v : table) total += v;
  return total;
}

}  // namespace

Integer lattice_count_simplex(const std::vector<Integer>& p, const Integer& q, const Integer& k) {
  const auto parts = absolute_parts(p, "lattice_count_simplex");
  if (q < 1) throw ValidationError("lattice_count_simplex: q must be >= 1");
  if (k < 0) throw ValidationError("lattice_count_simplex: k must be >= 0");
  return cumulative_denumerant(parts, k * q);
}

Rational EhrhartPolynomial::evaluate(const Integer& k) const {
  return evaluate_polynomial(coefficients, Rational(k));
}

EhrhartPolynomial ehrhart_polynomial(const std::vector<Integer>& p, const Integer& q) {
  const auto parts = absolute_parts(p, "ehrhart_polynomial");
  if (q < 1) throw ValidationError("ehrhart_polynomial: q must be >= 1");
  const std::size_t d = parts.size();

  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (std::size_t k = 0; k <= d; ++k) {
    xs.emplace_back(Integer(k));
    ys.emplace_back(lattice_count_simplex(p, q, Integer(k)));
  }
  EhrhartPolynomial out;
  out.coefficients = interpolate_polynomial(xs, ys);
  out.coefficients.resize(d + 1, Rational(0));
  out.p = p;
  out.q = q;

  for (std::size_t k = d + 1; k <= 3 * d; ++k) {
    if (out.evaluate(Integer(k)) != Rational(lattice_count_simplex(p, q, Integer(k))))
      throw InterpolationMismatch("ehrhart_polynomial: verification points disagree");
  }

  // Facet data. Coordinate facet {x_j = 0} is a (d-1)-simplex in its
  // coordinate hyperplane with relative volume q^{d-1}/((d-1)! prod_{l!=j}
  // |p_l|). The slanted facet's lattice volume divides the Euclidean one by
  // ||p||_2 / gcd(|p|).
  Integer prod_all = 1;
  Integer gcd_all = 0;
  double norm_sq = 0.0;
  for (const Integer& a : parts) {
    prod_all *= a;
    gcd_all = gcd(gcd_all, a);
    const double ad = a.convert_to<double>();
    norm_sq += ad * ad;
  }
  const Integer fact_dm1 = factorial(static_cast<unsigned>(d - 1));
  Rational q_pow(1);
  for (std::size_t i = 0; i + 1 < d; ++i) q_pow *= Rational(q);

  for (std::size_t j = 0; j < d; ++j) {
    out.facet_lattice_volumes.push_back(q_pow * Rational(parts[j], fact_dm1 * prod_all));
  }
  const Rational slant_lattice = q_pow * Rational(gcd_all, fact_dm1 * prod_all);
  out.facet_lattice_volumes.push_back(slant_lattice);
  out.slant_facet_euclidean_volume =
      std::sqrt(norm_sq) * to_double(q_pow) / (fact_dm1 * prod_all).convert_to<double>();
  return out;
}

Integer counting_function(const RationalFrequencies& rf, const Rational& E0, const Rational& r) {
  if (!rf.all_negative()) throw NotDiscreteBelow("counting_function: frequencies must be negative");
  if (r < E0) return 0;
  std::vector<Integer> parts;
  for (const Integer& pj : rf.p) parts.push_back(-pj);
  const Integer K = floor_rational((r - E0) / rf.x);
  return cumulative_denumerant(parts, K);
}

SandwichReport verify_sandwich(const RationalFrequencies& rf, const Rational& E0,
                               const Rational& r) {
  return verify_sandwich(rf, E0, r, ehrhart_polynomial(rf.p, rf.q_lcm));
}

SandwichReport verify_sandwich(const RationalFrequencies& rf, const Rational& E0,
                               const Rational& r, const EhrhartPolynomial& ehrhart) {
  if (!rf.all_negative()) throw NotDiscreteBelow("verify_sandwich: frequencies must be negative");
  const Rational t = (r - E0) / (Rational(rf.q_lcm) * rf.x);
  SandwichReport report;
  report.k = floor_rational(t);
  report.aligned = is_integer(t) && t >= 0;
  const Rational lower = ehrhart.evaluate(report.k);
  const Rational upper = ehrhart.evaluate(report.k + 1);
  report.lower = rational_num(lower);  // Ehrhart values at integers are integers
  report.upper = rational_num(upper);
  report.actual = counting_function(rf, E0, r);
  return report;
}

}  // namespace metaspec::combinatorics
