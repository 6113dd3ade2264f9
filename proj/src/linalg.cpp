#include "metaspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace metaspec::linalg {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_)
    throw ShapeMismatch("ComplexMatrix: entry count does not match dim*dim");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t j) const {
  std::vector<Complex> col(dim_);
  for (std::size_t i = 0; i < dim_; ++i) col[i] = (*this)(i, j);
  return col;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("matrix product: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("matrix sum: dimension mismatch");
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("matrix difference: dimension mismatch");
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = scale * a(i, j);
  return out;
}

std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& v) {
  if (a.dim() != v.size()) throw ShapeMismatch("matrix-vector product: dimension mismatch");
  std::vector<Complex> out(a.dim(), Complex(0.0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

RealMatrix::RealMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_)
    throw ShapeMismatch("RealMatrix: entry count does not match dim*dim");
}

RealMatrix RealMatrix::identity(std::size_t dim) {
  RealMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

double RealMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double RealMatrix::max_abs() const {
  double m = 0.0;
  for (double e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double residual_max_abs(const ComplexMatrix& m, const EigenDecomposition& eig) {
  const std::size_t n = m.dim();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += m(i, k) * eig.vectors(k, j);
      acc -= eig.values[j] * eig.vectors(i, j);
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

namespace {

double max_offdiag(const ComplexMatrix& a) {
  double m = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t p = 0; p + 1 < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) m = std::max(m, std::abs(a(p, q)));
  return m;
}

// One cyclic sweep of complex Jacobi rotations on Hermitian `a`,
// accumulating the transform into `v`. Entries below `thresh` are skipped.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v, double thresh) {
  const std::size_t n = a.dim();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const Complex apq = a(p, q);
      const double g = std::abs(apq);
      if (g <= thresh) continue;

      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const Complex phase = apq / g;  // e^{i phi}

      // cot(2 theta) = (aqq - app) / (2 |apq|); small-angle root.
      const double tau = (aqq - app) / (2.0 * g);
      double t;
      if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
      else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;

      // Unitary U differs from identity at
      //   U(p,p) = c          U(p,q) = s * phase
      //   U(q,p) = -s * conj(phase)   U(q,q) = c
      // chosen so that (U* A U)(p,q) = 0.
      const Complex upq = s * phase;
      const Complex uqp = -s * std::conj(phase);

      for (std::size_t k = 0; k < n; ++k) {  // A <- A U on columns p, q
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * c + akq * uqp;
        a(k, q) = akp * upq + akq * c;
      }
      for (std::size_t k = 0; k < n; ++k) {  // A <- U* A on rows p, q
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + c * aqk;
      }
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = Complex(a(p, p).real(), 0.0);
      a(q, q) = Complex(a(q, q).real(), 0.0);

      for (std::size_t k = 0; k < n; ++k) {  // V <- V U
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * c + vkq * uqp;
        v(k, q) = vkp * upq + vkq * c;
      }
    }
  }
}

}  // namespace

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& H, double tol,
                                                const JacobiOptions& options) {
  const std::size_t n = H.dim();
  if (n == 0) throw ShapeMismatch("hermitian_eigendecomposition: empty matrix");
  if (!H.all_finite()) throw ValidationError("hermitian_eigendecomposition: non-finite entries");
  if (max_abs_diff(H, H.adjoint()) > tol)
    throw NotHermitian("hermitian_eigendecomposition: input is not Hermitian to tolerance");

  ComplexMatrix a = H;
  // Symmetrize so round-off in the input cannot bias one triangle.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Complex(a(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      Complex mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = mean;
      a(j, i) = std::conj(mean);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, a.max_abs());
  const double target = 1e-14 * scale;

  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    const double off = max_offdiag(a);
    if (off <= target) break;
    // Loose threshold on early sweeps speeds convergence a little.
    const double thresh = (sweep < 3) ? 0.1 * off : 0.0;
    jacobi_sweep(a, v, thresh);
  }

  EigenDecomposition eig;
  eig.vectors = v;
  eig.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) eig.values[i] = Complex(a(i, i).real(), 0.0);

  if (sweep >= options.max_sweeps && max_offdiag(a) > target) {
    throw NoConvergence("hermitian_eigendecomposition: sweep budget exhausted",
                        residual_max_abs(H, eig));
  }

  // Ascending eigenvalues, columns permuted to match.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return eig.values[x].real() < eig.values[y].real(); });
  EigenDecomposition sorted;
  sorted.vectors = ComplexMatrix(n);
  sorted.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    sorted.values[j] = eig.values[order[j]];
    for (std::size_t i = 0; i < n; ++i) sorted.vectors(i, j) = eig.vectors(i, order[j]);
  }
  sorted.residual = residual_max_abs(H, sorted);
  return sorted;
}

EigenDecomposition normal_eigendecomposition(const ComplexMatrix& N, double tol,
                                             const JacobiOptions& options) {
  const std::size_t n = N.dim();
  if (n == 0) throw ShapeMismatch("normal_eigendecomposition: empty matrix");
  if (!N.all_finite()) throw ValidationError("normal_eigendecomposition: non-finite entries");
  const ComplexMatrix adj = N.adjoint();
  if (max_abs_diff(N * adj, adj * N) > tol)
    throw NotNormal("normal_eigendecomposition: input is not normal to tolerance");

  // N = H + iK with H, K Hermitian and commuting.
  ComplexMatrix h(n);
  ComplexMatrix k(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(i, j) = 0.5 * (N(i, j) + std::conj(N(j, i)));
      k(i, j) = Complex(0.0, -0.5) * (N(i, j) - std::conj(N(j, i)));
    }
  }

  EigenDecomposition eh = hermitian_eigendecomposition(h, tol * (1.0 + h.max_abs()), options);

  const double cluster_tol = 1e-8 * (1.0 + N.max_abs());
  EigenDecomposition out;
  out.vectors = ComplexMatrix(n);
  out.values.resize(n);

  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && eh.values[stop].real() - eh.values[stop - 1].real() <= cluster_tol) ++stop;
    const std::size_t m = stop - start;

    if (m == 1) {
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, start) = eh.vectors(i, start);
    } else {
      // K restricted to the eigenspace: W* K W, Hermitian of size m.
      ComplexMatrix ks(m);
      for (std::size_t a = 0; a < m; ++a) {
        std::vector<Complex> kwa(n, Complex(0.0));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t l = 0; l < n; ++l) kwa[i] += k(i, l) * eh.vectors(l, start + a);
        for (std::size_t b = 0; b < m; ++b) {
          Complex acc = 0.0;
          for (std::size_t i = 0; i < n; ++i) acc += std::conj(eh.vectors(i, start + b)) * kwa[i];
          ks(b, a) = acc;
        }
      }
      EigenDecomposition ek =
          hermitian_eigendecomposition(ks, 10.0 * tol * (1.0 + k.max_abs()), options);
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t i = 0; i < n; ++i) {
          Complex acc = 0.0;
          for (std::size_t a = 0; a < m; ++a)
            acc += eh.vectors(i, start + a) * ek.vectors(a, b);
          out.vectors(i, start + b) = acc;
        }
      }
    }
    start = stop;
  }

  // Rayleigh quotients as final values; exact for true eigenvectors.
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Complex> col = out.vectors.column(j);
    std::vector<Complex> ncol = N * col;
    Complex num = 0.0;
    Complex den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += std::conj(col[i]) * ncol[i];
      den += std::conj(col[i]) * col[i];
    }
    out.values[j] = num / den;
  }
  out.residual = residual_max_abs(N, out);
  return out;
}

bool validate_unitary(const ComplexMatrix& g, double tol) {
  if (g.dim() == 0 || !g.all_finite()) return false;
  return max_abs_diff(g.adjoint() * g, ComplexMatrix::identity(g.dim())) <= tol;
}

Complex determinant(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

ComplexMatrix matrix_exponential(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  int squarings = 0;
  double norm = a.max_abs() * static_cast<double>(n);
  while (norm > 0.5 && squarings < 60) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  ComplexMatrix b = Complex(scale, 0.0) * a;

  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int j = 1; j <= 24; ++j) {
    term = Complex(1.0 / j, 0.0) * (term * b);
    result = result + term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace metaspec::linalg
