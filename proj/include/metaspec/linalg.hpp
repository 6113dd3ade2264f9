#ifndef METASPEC_LINALG_HPP_
#define METASPEC_LINALG_HPP_

#include <complex>
#include <vector>

#include "metaspec/errors.hpp"

namespace metaspec::linalg {

using Complex = std::complex<double>;

constexpr double kDefaultTol = 1e-10;

// Dense square complex matrix, row-major. Small: everything here targets
// d <= ~12 plus Fock blocks up to a few thousand.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  double max_abs() const;

  // Column j as a vector.
  std::vector<Complex> column(std::size_t j) const;

  bool all_finite() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);
std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& v);

// max-abs entry of a - b
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Square real matrix, row-major; used for the (B, C) blocks.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}
  RealMatrix(std::size_t dim, std::vector<double> entries);

  static RealMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const double& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const std::vector<double>& entries() const { return entries_; }

  RealMatrix transpose() const;
  double trace() const;
  double max_abs() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> entries_;
};

struct EigenDecomposition {
  std::vector<Complex> values;  // paired with columns of `vectors`
  ComplexMatrix vectors;        // unit columns, unitary to ~1e-10
  double residual = 0.0;        // max-abs of M*V - V*diag(values)
};

struct JacobiOptions {
  int max_sweeps = 100;
};

// Cyclic complex Jacobi. Values real, ascending; columns permuted to match.
// Throws NotHermitian if ||H - H*||_max > tol, NoConvergence past the sweep
// budget (carrying the best residual reached).
EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& H, double tol = kDefaultTol,
                                                const JacobiOptions& options = {});

// Diagonalizes the Hermitian part, then the anti-Hermitian part restricted to
// each eigenspace cluster (the two commute for normal N). Values unsorted but
// paired with columns; callers sort by angle when they need an order.
EigenDecomposition normal_eigendecomposition(const ComplexMatrix& N, double tol = kDefaultTol,
                                             const JacobiOptions& options = {});

bool validate_unitary(const ComplexMatrix& g, double tol = kDefaultTol);

// LU with partial pivoting; adequate at these sizes.
Complex determinant(const ComplexMatrix& m);

// Scaling-and-squaring Taylor exponential; used by the group-compatibility
// checks, accuracy ~1e-12 for ||A|| of order one.
ComplexMatrix matrix_exponential(const ComplexMatrix& a);

double residual_max_abs(const ComplexMatrix& m, const EigenDecomposition& eig);

}  // namespace metaspec::linalg

#endif  // METASPEC_LINALG_HPP_
