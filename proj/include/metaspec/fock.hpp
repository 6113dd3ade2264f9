#ifndef METASPEC_FOCK_HPP_
#define METASPEC_FOCK_HPP_

#include <vector>

#include "metaspec/linalg.hpp"
#include "metaspec/symbols.hpp"

namespace metaspec::fock {

using linalg::Complex;
using linalg::ComplexMatrix;
using symbols::LieAlgebraElement;

constexpr std::size_t kDefaultDimensionCap = 3000;

// Multi-indices alpha in N_0^d with |alpha| = k, lexicographically ascending;
// the coordinates of degree-k polynomials in the monomial basis z^alpha.
struct MonomialBasis {
  std::size_t d = 0;
  std::size_t k = 0;
  std::vector<std::vector<unsigned>> indices;
  std::size_t dim = 0;

  static MonomialBasis create(std::size_t d, std::size_t k);
  std::size_t index_of(const std::vector<unsigned>& alpha) const;
};

enum class BlockKind { Hamiltonian, Unitary };
enum class PhaseBranch { Principal, Other };

// A dense operator block on one monomial basis slice. The monomials are
// orthogonal but not orthonormal; the weights w_alpha = alpha! restore the
// similarity transform under which Hamiltonian blocks are Hermitian and
// unitary blocks unitary.
struct FockBlock {
  MonomialBasis basis;
  ComplexMatrix matrix;
  BlockKind kind = BlockKind::Hamiltonian;
  std::vector<double> weights;      // alpha!; saturates for extreme k, see logs
  std::vector<double> log_weights;  // log alpha!, always finite

  // W^{1/2} M W^{-1/2}, computed from the log weights.
  ComplexMatrix similarity_transformed() const;
};

// Matrix of the derived action: dnu(A) z^alpha =
//   -(1/2) tr(A_c) z^alpha - sum_{l,m} alpha_l (A_c)_{lm} z^{alpha - e_l + e_m}.
ComplexMatrix dnu_matrix(const LieAlgebraElement& A, const MonomialBasis& basis);

// -i dnu_k(A); weighted-Hermitian.
FockBlock block_matrix_hamiltonian(const LieAlgebraElement& A, std::size_t k,
                                   std::size_t dimension_cap = kDefaultDimensionCap);

// nu_k(g): column alpha holds det(g)^{-1/2} (g^{-1} z)^alpha expanded over the
// monomial basis; weighted-unitary.
FockBlock block_matrix_unitary(const ComplexMatrix& g, std::size_t k,
                               PhaseBranch branch = PhaseBranch::Principal,
                               std::size_t dimension_cap = kDefaultDimensionCap);

// Closed-form block spectrum {E_0 - sum n_j s_j : |n| = k}, ascending.
std::vector<double> predicted_block_spectrum(const std::vector<double>& s, double E0,
                                             std::size_t k);

// Coefficients over MonomialBasis(d, |n|) of prod_i (sum_j conj(V_{ji}) z_j)^{n_i}.
std::vector<Complex> eigenpolynomial(const ComplexMatrix& V, const std::vector<unsigned>& n);

// ||M c - lambda c||_2 / ||c||_2.
double verify_eigenpair(const FockBlock& block, const std::vector<Complex>& coeffs,
                        Complex lambda);

struct CrossValidationReport {
  std::size_t d = 0;
  std::size_t k = 0;
  std::size_t dim = 0;
  bool matched = false;
  double max_pairing_error = 0.0;
};

// Diagonalizes the weighted-Hermitian form of the block and pairs sorted
// eigenvalues against the closed form.
CrossValidationReport cross_validate_block(const LieAlgebraElement& A, std::size_t k, double tol,
                                           std::size_t dimension_cap = kDefaultDimensionCap);

}  // namespace metaspec::fock

#endif  // METASPEC_FOCK_HPP_
