#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "drazin_lab/linalg.hpp"
#include "drazin_lab/matrix.hpp"
#include "drazin_lab/report.hpp"

namespace drazin_lab {

/// Outcome of solving AB = CA, BA = AC for C.
struct WitnessResult {
  std::optional<ComplexMatrix> witness;  ///< present iff the system is feasible
  ComplexMatrix candidate;               ///< minimum-norm least-squares solution
  double residual = 0.0;   ///< ||AB - CA||_F + ||BA - AC||_F at the candidate
  double scale = 0.0;      ///< n * ||A||_F * ||B||_F
  double threshold = 0.0;  ///< residual_rel * scale
  std::size_t solution_space_dim = 0;

  [[nodiscard]] bool exists() const { return witness.has_value(); }
  /// residual / scale; comparable against residual_rel.
  [[nodiscard]] double normalized_residual() const { return scaled_residual(residual, scale); }
};

enum class RelationFlag { commuting, a_weak, b_weak, ab_weak, squared_commuting, chen_sheibani };

inline constexpr RelationFlag kAllRelationFlags[] = {
    RelationFlag::commuting, RelationFlag::a_weak,          RelationFlag::b_weak,
    RelationFlag::ab_weak,   RelationFlag::squared_commuting, RelationFlag::chen_sheibani,
};

std::string_view to_string(RelationFlag f);
std::optional<RelationFlag> parse_relation_flag(std::string_view name);

struct RelationClass {
  std::set<RelationFlag> flags;
  std::optional<ComplexMatrix> a_witness;  ///< C with AB = CA, BA = AC
  std::optional<ComplexMatrix> b_witness;  ///< C with AB = BC, BA = CB
  std::map<RelationFlag, double> residuals;

  [[nodiscard]] bool has(RelationFlag f) const { return flags.count(f) != 0; }
};

/// Minimum-Frobenius-norm solution C of CA = AB, AC = BA from the stacked
/// 2n^2 x n^2 system [A^T (x) I; I (x) A] vec(C) = [vec(AB); vec(BA)].
WitnessResult solve_witness(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol);
/// Same system with the feasibility scale supplied by the caller, for
/// operands derived from larger factors (e.g. AA^D A) whose own norms may be
/// at roundoff level.
WitnessResult solve_witness(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol,
                            double scale);

/// Basis of the homogeneous solutions H (HA = 0, AH = 0); adding any
/// combination to a witness gives another witness.
std::vector<ComplexMatrix> witness_homogeneous_basis(const ComplexMatrix& a, const Tolerance& tol);

RelationClass classify_pair(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol);

/// Given AB = CA and BA = AC, checks AA^D B = B AA^D, AA^D C = C AA^D,
/// A^D B = C A^D and A^D C = B A^D. Throws PreconditionError naming the
/// input equation that does not hold.
VerificationReport commutation_identities(const ComplexMatrix& a, const ComplexMatrix& b,
                                          const ComplexMatrix& c, const Tolerance& tol);

}  // namespace drazin_lab
