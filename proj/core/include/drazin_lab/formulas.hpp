#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "drazin_lab/linalg.hpp"
#include "drazin_lab/matrix.hpp"
#include "drazin_lab/report.hpp"

namespace drazin_lab {

/// (A+B)^D for B nilpotent and (A, B) weakly commutative in both
/// directions, in resolvent form (I + A^D B)^{-1} A^D and in series form
/// sum_n (A^D)^{2n} (-AB)^n A^D. Both are compared with the direct Drazin
/// inverse of A + B; `primary` selects which one is the formula output.
VerificationReport sum_drazin_nilpotent(const ComplexMatrix& a, const ComplexMatrix& b,
                                        const Tolerance& tol,
                                        FormulaId primary = FormulaId::SUM_NILPOTENT_RESOLVENT);

/// One of SUM_2_9, COR_2_10_I, COR_2_10_II, COR_2_10_III. Throws
/// std::invalid_argument for any other id and SingularResolventError when
/// the SUM_2_9 resolvent cannot be inverted.
VerificationReport sum_representation(FormulaId formula, const ComplexMatrix& a,
                                      const ComplexMatrix& b, const Tolerance& tol);

/// (AB)^D = B^D A^D, with the nilpotency facts its proof relies on.
VerificationReport product_drazin(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const Tolerance& tol);

/// (A+B)^D = (I + AB)^D A for involutions with A - B = BAB - ABA.
VerificationReport involutory_sum(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const Tolerance& tol);

/// (BA)^D = B ((AB)^D)^2 A. When A is invertible and a witness C of
/// AB = CA, BA = AC is known (or can be solved for), also checks that
/// (A+B)^D = A^{-1} (A+C)^D A.
VerificationReport cline_transfer(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const Tolerance& tol,
                                  const std::optional<ComplexMatrix>& c = std::nullopt);

/// Block lower-triangular Drazin formula against the direct inverse of the
/// assembled matrix.
VerificationReport block_formula(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                 const ComplexMatrix& a3, const Tolerance& tol);

/// Evaluates every hypothesis of the named result, then its conclusion.
/// Inputs are (A, B) or (A, B, C); throws ArityError otherwise.
VerificationReport check_hypotheses(HypothesisId which, std::span<const ComplexMatrix> inputs,
                                    const Tolerance& tol);

/// Required number of inputs for a formula or hypothesis name, if known.
std::optional<std::size_t> expected_arity(std::string_view id);

/// Dispatches on a FormulaId or HypothesisId name.
VerificationReport evaluate(std::string_view id, std::span<const ComplexMatrix> inputs,
                            const Tolerance& tol);

}  // namespace drazin_lab
