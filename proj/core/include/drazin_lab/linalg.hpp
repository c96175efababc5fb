#pragma once

#include <cstddef>
#include <vector>

#include "drazin_lab/matrix.hpp"

namespace drazin_lab {

/// Numerical cutoffs. `rank_rel` scales the singular-value threshold,
/// `residual_rel` the acceptance threshold for identity residuals.
struct Tolerance {
  double rank_rel = 1e-10;
  double residual_rel = 1e-9;

  /// Throws std::invalid_argument unless both values lie in (0, 1).
  static Tolerance make(double rank_rel, double residual_rel);
  void validate() const;
};

/// Standard matrix product. Throws DimensionError when a.cols != b.rows.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Singular values in non-increasing order.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Largest singular value (0 for an empty matrix).
double spectral_norm(const ComplexMatrix& a);

/// Number of singular values above rank_rel * sigma_max * max(rows, cols).
std::size_t rank(const ComplexMatrix& a, const Tolerance& tol);

/// Like rank(), but the cutoff is rank_rel * reference * max(rows, cols).
/// Used where a matrix is expected to be (near) zero and its own largest
/// singular value would be roundoff, e.g. powers of nilpotent matrices.
std::size_t rank_against(const ComplexMatrix& a, const Tolerance& tol, double reference);

/// Moore-Penrose pseudoinverse from a truncated SVD.
ComplexMatrix pseudo_inverse(const ComplexMatrix& a, const Tolerance& tol);

struct LeastSquaresSolution {
  ComplexMatrix solution;  ///< column vector, m.cols x 1
  double residual_norm = 0.0;
  std::size_t rank = 0;
};

/// Minimum-norm least-squares solution of m * x = rhs via a complete
/// orthogonal decomposition (column-pivoted QR followed by RZ).
LeastSquaresSolution solve_linear_least_squares(const ComplexMatrix& m, const ComplexMatrix& rhs,
                                                const Tolerance& tol);

/// a^k by repeated squaring; a^0 = I. Throws NonSquareError.
ComplexMatrix matrix_power(const ComplexMatrix& a, std::size_t k);

/// Inverse of a square matrix; throws SingularMatrixError when rank(a) < n.
ComplexMatrix inverse(const ComplexMatrix& a, const Tolerance& tol);

bool is_invertible(const ComplexMatrix& a, const Tolerance& tol);

/// Kronecker product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Column-major vectorization and its inverse.
ComplexMatrix vec(const ComplexMatrix& a);
ComplexMatrix unvec(const ComplexMatrix& v, Index rows, Index cols);

struct NilpotencyCheck {
  bool nilpotent = false;
  std::size_t index = 0;   ///< least k with m^k = 0; 0 when not nilpotent
  double residual = 0.0;   ///< sigma_max(m^n) / scale^n
};

/// Decides nilpotency from the rank sequence of m^k, k = 1..n, each rank
/// measured against scale^k. `scale` must bound the magnitude of the terms
/// m was computed from (a product or sum of norms), so that a matrix that is
/// zero up to roundoff is recognised as such.
NilpotencyCheck nilpotency(const ComplexMatrix& m, const Tolerance& tol, double scale);
NilpotencyCheck nilpotency(const ComplexMatrix& m, const Tolerance& tol);

/// raw / scale, or raw itself when scale is zero.
double scaled_residual(double raw, double scale);

}  // namespace drazin_lab
