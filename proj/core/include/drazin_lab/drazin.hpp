#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "drazin_lab/linalg.hpp"
#include "drazin_lab/matrix.hpp"
#include "drazin_lab/report.hpp"

namespace drazin_lab {

struct DrazinResult {
  ComplexMatrix d_inverse;
  std::size_t index = 0;
  ComplexMatrix projector;  ///< spectral idempotent I - A A^D
  std::size_t core_dim = 0;
  double core_condition = 1.0;  ///< 2-norm condition number of the core block
  std::vector<std::string> warnings;
};

/// Similarity A = S diag(core, nilpotent) S^{-1} with S's columns spanning
/// R(A^k) followed by N(A^k), k the index.
struct CoreNilpotentSplit {
  ComplexMatrix basis_change;
  ComplexMatrix basis_change_inverse;
  ComplexMatrix core_block;
  ComplexMatrix nilpotent_block;
  std::size_t index = 0;

  [[nodiscard]] std::size_t core_dim() const { return static_cast<std::size_t>(core_block.rows()); }
};

/// S^{-1} M S partitioned conformally with a CoreNilpotentSplit.
struct SplitBlocks {
  ComplexMatrix core;       ///< top-left
  ComplexMatrix upper;      ///< top-right
  ComplexMatrix lower;      ///< bottom-left
  ComplexMatrix nilpotent;  ///< bottom-right
};

/// Least k >= 0 with rank(a^k) = rank(a^{k+1}); 0 iff a is invertible.
/// Ranks of a^k are measured against ||a||_2^{k-1} max(||a||_2, scale), the
/// size of roundoff in a computed a^k, so that roundoff left in powers of a
/// nilpotent part is not mistaken for rank. Pass a bound on the factor norms
/// when `a` is a computed product or sum (AB, A + B, AA^D B, ...): a result
/// that vanishes up to roundoff then has rank 0 instead of full rank
/// relative to its own tiny norm.
std::size_t drazin_index(const ComplexMatrix& a, const Tolerance& tol, double scale = 0.0);

CoreNilpotentSplit core_nilpotent_split(const ComplexMatrix& a, const Tolerance& tol,
                                        double scale = 0.0);

/// Drazin inverse through the core-nilpotent decomposition. A warning is
/// attached when the core block's condition number exceeds 1 / rank_rel.
DrazinResult drazin_inverse(const ComplexMatrix& a, const Tolerance& tol, double scale = 0.0);

SplitBlocks split_blocks(const CoreNilpotentSplit& split, const ComplexMatrix& m);

/// A matrix together with its precomputed Drazin data.
struct DrazinOperand {
  ComplexMatrix matrix;
  DrazinResult drazin;

  static DrazinOperand of(ComplexMatrix m, const Tolerance& tol);
};

/// [[a1, 0], [a3, a2]].
ComplexMatrix assemble_lower_triangular(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                        const ComplexMatrix& a3);

/// Drazin inverse of [[A1, 0], [A3, A2]] assembled from the Drazin data of
/// the diagonal blocks:
///
///   [[A1^D, 0], [X, A2^D]],
///   X = sum_{n<i(A1)} (A2^D)^{n+2} A3 A1^n A1^pi
///     + sum_{n<i(A2)} A2^pi A2^n A3 (A1^D)^{n+2}
///     - A2^D A3 A1^D.
ComplexMatrix block_triangular_drazin(const DrazinOperand& a1, const DrazinOperand& a2,
                                      const ComplexMatrix& a3, const Tolerance& tol);
ComplexMatrix block_triangular_drazin(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                      const ComplexMatrix& a3, const Tolerance& tol);

/// Residuals of AX = XA, XAX = X and (A - A^2 X)^k = 0. The nilpotency
/// residual uses max(k, 1) so that k = 0 checks A = A^2 X. `scale` plays
/// the same role as in drazin_index.
VerificationReport verify_drazin_axioms(const ComplexMatrix& a, const ComplexMatrix& x,
                                        std::size_t k, const Tolerance& tol, double scale = 0.0);

}  // namespace drazin_lab
