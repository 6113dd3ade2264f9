#include "metaspec/fock.hpp"

#include <algorithm>
#include <cmath>

#include "metaspec/rational.hpp"

namespace metaspec::fock {

namespace {

void fill_indices(std::size_t d, std::size_t k, std::vector<unsigned>& current, std::size_t pos,
                  std::vector<std::vector<unsigned>>& out) {
  if (pos + 1 == d) {
    current[pos] = static_cast<unsigned>(k);
    out.push_back(current);
    return;
  }
  for (std::size_t v = 0; v <= k; ++v) {
    current[pos] = static_cast<unsigned>(v);
    fill_indices(d, k - v, current, pos + 1, out);
  }
}

double log_weight(const std::vector<unsigned>& alpha) {
  double acc = 0.0;
  for (unsigned a : alpha) acc += std::lgamma(static_cast<double>(a) + 1.0);
  return acc;
}

std::size_t checked_dim(std::size_t d, std::size_t k, std::size_t cap, const char* where) {
  const Integer dim = binomial(static_cast<unsigned>(d + k - 1), static_cast<unsigned>(k));
  if (dim > Integer(cap))
    throw DimensionCap(std::string(where) + ": block dimension exceeds the cap");
  return dim.convert_to<std::size_t>();
}

// Multiplies a dense degree-m coefficient vector by a linear form sum_l c_l z_l.
std::vector<Complex> multiply_by_linear_form(const std::vector<Complex>& coeffs,
                                             const MonomialBasis& from, const MonomialBasis& to,
                                             const std::vector<Complex>& form) {
  std::vector<Complex> out(to.dim, Complex(0.0));
  std::vector<unsigned> beta(from.d);
  for (std::size_t i = 0; i < from.dim; ++i) {
    if (coeffs[i] == Complex(0.0)) continue;
    beta = from.indices[i];
    for (std::size_t l = 0; l < from.d; ++l) {
      if (form[l] == Complex(0.0)) continue;
      ++beta[l];
      out[to.index_of(beta)] += coeffs[i] * form[l];
      --beta[l];
    }
  }
  return out;
}

// Expands prod_i form_i^{exponent_i} over the monomial basis of the total degree.
std::vector<Complex> expand_linear_forms(std::size_t d,
                                         const std::vector<std::vector<Complex>>& forms,
                                         const std::vector<unsigned>& exponents) {
  std::size_t total = 0;
  for (unsigned e : exponents) total += e;

  std::vector<MonomialBasis> bases;
  bases.reserve(total + 1);
  for (std::size_t m = 0; m <= total; ++m) bases.push_back(MonomialBasis::create(d, m));

  std::vector<Complex> coeffs{Complex(1.0)};
  std::size_t degree = 0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (unsigned rep = 0; rep < exponents[i]; ++rep) {
      coeffs = multiply_by_linear_form(coeffs, bases[degree], bases[degree + 1], forms[i]);
      ++degree;
    }
  }
  return coeffs;
}

}  // namespace

MonomialBasis MonomialBasis::create(std::size_t d, std::size_t k) {
  if (d == 0) throw ShapeMismatch("MonomialBasis: d must be positive");
  MonomialBasis basis;
  basis.d = d;
  basis.k = k;
  std::vector<unsigned> current(d, 0);
  fill_indices(d, k, current, 0, basis.indices);
  basis.dim = basis.indices.size();
  return basis;
}

std::size_t MonomialBasis::index_of(const std::vector<unsigned>& alpha) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), alpha);
  if (it == indices.end() || *it != alpha)
    throw ShapeMismatch("MonomialBasis::index_of: index not in basis");
  return static_cast<std::size_t>(it - indices.begin());
}

ComplexMatrix FockBlock::similarity_transformed() const {
  const std::size_t n = basis.dim;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix(i, j) == Complex(0.0)) {
        out(i, j) = 0.0;
        continue;
      }
      out(i, j) = matrix(i, j) * std::exp(0.5 * (log_weights[i] - log_weights[j]));
    }
  }
  return out;
}

ComplexMatrix dnu_matrix(const LieAlgebraElement& A, const MonomialBasis& basis) {
  if (A.d != basis.d) throw ShapeMismatch("dnu_matrix: dimension mismatch");
  const std::size_t n = basis.dim;
  const Complex half_trace = 0.5 * A.complex_form.trace();

  ComplexMatrix m(n);
  std::vector<unsigned> beta(basis.d);
  for (std::size_t col = 0; col < n; ++col) {
    const std::vector<unsigned>& alpha = basis.indices[col];
    Complex diag = -half_trace;
    for (std::size_t l = 0; l < basis.d; ++l) {
      if (alpha[l] == 0) continue;
      const double al = static_cast<double>(alpha[l]);
      diag -= al * A.complex_form(l, l);
      beta = alpha;
      for (std::size_t mm = 0; mm < basis.d; ++mm) {
        if (mm == l || A.complex_form(l, mm) == Complex(0.0)) continue;
        --beta[l];
        ++beta[mm];
        m(basis.index_of(beta), col) -= al * A.complex_form(l, mm);
        --beta[mm];
        ++beta[l];
      }
    }
    m(col, col) += diag;
  }
  return m;
}

FockBlock block_matrix_hamiltonian(const LieAlgebraElement& A, std::size_t k,
                                   std::size_t dimension_cap) {
  checked_dim(A.d, k, dimension_cap, "block_matrix_hamiltonian");
  FockBlock block;
  block.basis = MonomialBasis::create(A.d, k);
  block.kind = BlockKind::Hamiltonian;
  block.matrix = Complex(0.0, -1.0) * dnu_matrix(A, block.basis);
  block.weights.reserve(block.basis.dim);
  block.log_weights.reserve(block.basis.dim);
  for (const auto& alpha : block.basis.indices) {
    const double lw = log_weight(alpha);
    block.log_weights.push_back(lw);
    block.weights.push_back(std::exp(lw));
  }
  return block;
}

FockBlock block_matrix_unitary(const ComplexMatrix& g, std::size_t k, PhaseBranch branch,
                               std::size_t dimension_cap) {
  if (!linalg::validate_unitary(g))
    throw NotUnitary("block_matrix_unitary: matrix is not unitary");
  const std::size_t d = g.dim();
  const std::size_t n = checked_dim(d, k, dimension_cap, "block_matrix_unitary");

  const ComplexMatrix ginv = g.adjoint();
  Complex phase = std::sqrt(Complex(1.0) / linalg::determinant(g));
  if (branch == PhaseBranch::Other) phase = -phase;

  // Row j of g^{-1} is the linear form (g^{-1} z)_j.
  std::vector<std::vector<Complex>> forms(d, std::vector<Complex>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l) forms[j][l] = ginv(j, l);

  FockBlock block;
  block.basis = MonomialBasis::create(d, k);
  block.kind = BlockKind::Unitary;
  block.matrix = ComplexMatrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Complex> expanded = expand_linear_forms(d, forms, block.basis.indices[col]);
    for (std::size_t row = 0; row < n; ++row) block.matrix(row, col) = phase * expanded[row];
  }
  block.weights.reserve(n);
  block.log_weights.reserve(n);
  for (const auto& alpha : block.basis.indices) {
    const double lw = log_weight(alpha);
    block.log_weights.push_back(lw);
    block.weights.push_back(std::exp(lw));
  }
  return block;
}

std::vector<double> predicted_block_spectrum(const std::vector<double>& s, double E0,
                                             std::size_t k) {
  if (s.empty()) throw ShapeMismatch("predicted_block_spectrum: empty frequency list");
  const MonomialBasis basis = MonomialBasis::create(s.size(), k);
  std::vector<double> values;
  values.reserve(basis.dim);
  for (const auto& alpha : basis.indices) {
    double v = E0;
    for (std::size_t j = 0; j < s.size(); ++j) v -= static_cast<double>(alpha[j]) * s[j];
    values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<Complex> eigenpolynomial(const ComplexMatrix& V, const std::vector<unsigned>& n) {
  const std::size_t d = V.dim();
  if (n.size() != d) throw ShapeMismatch("eigenpolynomial: multi-index length mismatch");
  // <v_i, e_j> with the inner product conjugate-linear in the first slot.
  std::vector<std::vector<Complex>> forms(d, std::vector<Complex>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) forms[i][j] = std::conj(V(j, i));
  return expand_linear_forms(d, forms, n);
}

double verify_eigenpair(const FockBlock& block, const std::vector<Complex>& coeffs,
                        Complex lambda) {
  if (coeffs.size() != block.basis.dim)
    throw ShapeMismatch("verify_eigenpair: coefficient length mismatch");
  double num = 0.0;
  double den = 0.0;
  std::vector<Complex> mc = block.matrix * coeffs;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Complex r = mc[i] - lambda * coeffs[i];
    num += std::norm(r);
    den += std::norm(coeffs[i]);
  }
  if (den == 0.0) throw ShapeMismatch("verify_eigenpair: zero coefficient vector");
  return std::sqrt(num / den);
}

CrossValidationReport cross_validate_block(const LieAlgebraElement& A, std::size_t k, double tol,
                                           std::size_t dimension_cap) {
  FockBlock block = block_matrix_hamiltonian(A, k, dimension_cap);
  ComplexMatrix herm = block.similarity_transformed();
  const double gate = 1e-9 * (1.0 + herm.max_abs());
  auto eig = linalg::hermitian_eigendecomposition(herm, gate);

  std::vector<double> predicted = predicted_block_spectrum(A.frequencies, A.ground_shift, k);

  CrossValidationReport report;
  report.d = A.d;
  report.k = k;
  report.dim = block.basis.dim;
  double worst = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i)
    worst = std::max(worst, std::abs(eig.values[i].real() - predicted[i]));
  report.max_pairing_error = worst;
  report.matched = worst <= tol;
  return report;
}

}  // namespace metaspec::fock
