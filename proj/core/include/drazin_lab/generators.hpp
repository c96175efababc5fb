#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drazin_lab/linalg.hpp"
#include "drazin_lab/matrix.hpp"
#include "drazin_lab/report.hpp"
#include "drazin_lab/rng.hpp"
#include "drazin_lab/weakcommute.hpp"

namespace drazin_lab {

enum class Family {
  PAPER_EX_1_6,
  PAPER_EX_2_4,
  PAPER_EX_2_6,
  PAPER_EX_3_4,
  PAPER_EX_4_3_BLOCK,
  CONJUGATION,
  BLOCK_SPLIT,
  INVOLUTORY_SIM,
  NEGATIVE_CONTROL,
};

inline constexpr Family kAllFamilies[] = {
    Family::PAPER_EX_1_6,       Family::PAPER_EX_2_4, Family::PAPER_EX_2_6,
    Family::PAPER_EX_3_4,       Family::PAPER_EX_4_3_BLOCK, Family::CONJUGATION,
    Family::BLOCK_SPLIT,        Family::INVOLUTORY_SIM, Family::NEGATIVE_CONTROL,
};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Dimension forced by the family (the PAPER_* families and INVOLUTORY_SIM),
/// or nullopt when any dimension in the family's range is accepted.
std::optional<std::size_t> fixed_dim(Family f);

/// Family parameters (all optional, positional):
///   PAPER_EX_3_4      x, y  (real) or x_re, x_im, y_re, y_im
///   CONJUGATION       mode: 0 a-weak only, 1 {A,B}-weak with B invertible,
///                     2 {A,B}-weak with B nilpotent
///   BLOCK_SPLIT       core mode: 0 nilpotent B1, 1 invertible B1, 2 mixed,
///                     3 B1 = 0, 4 B1 a polynomial in A1 (commuting);
///                     nil mode: 0 nilpotent B2, 1 invertible B2;
///                     similarity: 1 (default) hides the block structure
///   NEGATIVE_CONTROL  base family index, target (0 breaks a_weak, 1 breaks
///                     b_weak), then the base family's parameters
/// dim = 0 selects the family default.
struct FamilySpec {
  Family family = Family::PAPER_EX_1_6;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::vector<double> params;
};

struct GeneratedInstance {
  FamilySpec spec;  ///< with dim resolved
  ComplexMatrix a;
  ComplexMatrix b;
  std::optional<ComplexMatrix> c;  ///< known witness of AB = CA, BA = AC
  /// Relation flags the construction guarantees, true or false. Flags the
  /// construction leaves open are absent.
  std::map<RelationFlag, bool> expected_class;
  /// Expected verdict per FormulaId / HypothesisId name.
  std::map<std::string, Verdict> expected_outcomes;
  std::optional<std::string> broken_hypothesis;  ///< NEGATIVE_CONTROL only
  std::vector<std::string> notes;
};

/// Deterministic in (family, dim, seed, params). Throws DimensionError for
/// a dimension the family cannot produce and GenerationError when rejection
/// sampling gives up after 100 attempts.
GeneratedInstance generate(const FamilySpec& spec);

/// Inputs fed to `evaluate` for the given id: (A, B), or (A, B, C) with C
/// the known witness, else the solved a-witness, else zero. BLOCK_2_2 takes
/// (A, B, C) when C is known and (A, B, AB) otherwise.
std::vector<ComplexMatrix> outcome_inputs(const GeneratedInstance& inst, std::string_view id,
                                          const Tolerance& tol);

/// One expected verdict re-derived through the formulas module.
struct OutcomeCheck {
  std::string id;
  Verdict expected = Verdict::pass;
  std::optional<Verdict> got;  ///< empty when evaluation threw
  double deviation = 0.0;
  std::string detail;  ///< failing hypotheses or the exception message
  [[nodiscard]] bool ok() const { return got == expected; }
};

std::vector<OutcomeCheck> check_outcomes(const GeneratedInstance& inst, const Tolerance& tol);

/// Re-derives the expected flags with classify_pair and every expected
/// verdict through the formulas module. Mismatches (and exceptions) are
/// reported as failing checks.
VerificationReport self_check(const GeneratedInstance& inst, const Tolerance& tol);

enum class DrazinKind { invertible, nilpotent, mixed };

/// P diag(core, N) P^{-1} with a well-conditioned core, N a direct sum of
/// Jordan-type nilpotent blocks and P well-conditioned.
ComplexMatrix random_drazin_matrix(Rng& rng, Index n, DrazinKind kind);

/// Strictly lower bidiagonal nilpotent matrix; each subdiagonal entry is
/// zero with probability 1/3, otherwise of modulus in [0.75, 1.25].
ComplexMatrix random_nilpotent(Rng& rng, Index n);

}  // namespace drazin_lab
