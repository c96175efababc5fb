#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drazin_lab/linalg.hpp"
#include "drazin_lab/matrix.hpp"

namespace drazin_lab {

/// Closed-form Drazin representations that can be evaluated and compared
/// against a direct Drazin inverse.
enum class FormulaId {
  SUM_NILPOTENT_RESOLVENT,
  SUM_NILPOTENT_SERIES,
  SUM_2_9,
  COR_2_10_I,
  COR_2_10_II,
  COR_2_10_III,
  PRODUCT_3_3,
  INVOLUTORY_4_2,
  CLINE_4_1,
  BLOCK_2_2,
};

/// Hypothesis sets whose conditions and structural conclusions are checked.
enum class HypothesisId {
  THM_2_7,
  THM_2_11,
  THM_2_12,
  COR_3_5,
  THM_4_4,
  PROP_4_5,
};

inline constexpr FormulaId kAllFormulas[] = {
    FormulaId::SUM_NILPOTENT_RESOLVENT, FormulaId::SUM_NILPOTENT_SERIES, FormulaId::SUM_2_9,
    FormulaId::COR_2_10_I,              FormulaId::COR_2_10_II,          FormulaId::COR_2_10_III,
    FormulaId::PRODUCT_3_3,             FormulaId::INVOLUTORY_4_2,       FormulaId::CLINE_4_1,
    FormulaId::BLOCK_2_2,
};

inline constexpr HypothesisId kAllHypotheses[] = {
    HypothesisId::THM_2_7, HypothesisId::THM_2_11, HypothesisId::THM_2_12,
    HypothesisId::COR_3_5, HypothesisId::THM_4_4,  HypothesisId::PROP_4_5,
};

std::string_view to_string(FormulaId id);
std::string_view to_string(HypothesisId id);
std::optional<FormulaId> parse_formula_id(std::string_view name);
std::optional<HypothesisId> parse_hypothesis_id(std::string_view name);

enum class Verdict { pass, fail, hypotheses_not_met };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view name);

/// One named residual test. `residual` is already scale-normalised.
struct Check {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string formula;
  Verdict verdict = Verdict::fail;
  double deviation = 0.0;
  std::vector<Check> hypotheses;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::optional<ComplexMatrix> formula_output;
  std::optional<ComplexMatrix> oracle_output;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> family;

  [[nodiscard]] bool hypotheses_pass() const;
  [[nodiscard]] bool checks_pass() const;
  [[nodiscard]] std::vector<std::string> failing_hypotheses() const;
  [[nodiscard]] const Check* find_check(std::string_view name) const;
};

/// ||formula - oracle||_F / max(1, ||oracle||_F).
double deviation(const ComplexMatrix& formula, const ComplexMatrix& oracle);

/// Residual of lhs = rhs normalised by `scale` (the product of the factor
/// norms on either side); passes when at most tol.residual_rel.
Check equation_check(std::string name, const ComplexMatrix& lhs, const ComplexMatrix& rhs,
                     double scale, const Tolerance& tol);

/// Residual check of a matrix that should vanish.
Check zero_check(std::string name, const ComplexMatrix& m, double scale, const Tolerance& tol);

/// Largest normalised residual among the supplied checks (0 when empty).
double worst_residual(const std::vector<Check>& checks);

}  // namespace drazin_lab
