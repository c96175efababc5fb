#include "drazin_lab/report.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace drazin_lab {
namespace {

constexpr std::array<std::pair<FormulaId, std::string_view>, 10> kFormulaNames{{
    {FormulaId::SUM_NILPOTENT_RESOLVENT, "SUM_NILPOTENT_RESOLVENT"},
    {FormulaId::SUM_NILPOTENT_SERIES, "SUM_NILPOTENT_SERIES"},
    {FormulaId::SUM_2_9, "SUM_2_9"},
    {FormulaId::COR_2_10_I, "COR_2_10_I"},
    {FormulaId::COR_2_10_II, "COR_2_10_II"},
    {FormulaId::COR_2_10_III, "COR_2_10_III"},
    {FormulaId::PRODUCT_3_3, "PRODUCT_3_3"},
    {FormulaId::INVOLUTORY_4_2, "INVOLUTORY_4_2"},
    {FormulaId::CLINE_4_1, "CLINE_4_1"},
    {FormulaId::BLOCK_2_2, "BLOCK_2_2"},
}};

constexpr std::array<std::pair<HypothesisId, std::string_view>, 6> kHypothesisNames{{
    {HypothesisId::THM_2_7, "THM_2_7"},
    {HypothesisId::THM_2_11, "THM_2_11"},
    {HypothesisId::THM_2_12, "THM_2_12"},
    {HypothesisId::COR_3_5, "COR_3_5"},
    {HypothesisId::THM_4_4, "THM_4_4"},
    {HypothesisId::PROP_4_5, "PROP_4_5"},
}};

constexpr std::array<std::pair<Verdict, std::string_view>, 3> kVerdictNames{{
    {Verdict::pass, "pass"},
    {Verdict::fail, "fail"},
    {Verdict::hypotheses_not_met, "hypotheses-not-met"},
}};

template <typename Table, typename Key>
std::string_view name_of(const Table& table, Key key) {
  for (const auto& [k, name] : table) {
    if (k == key) return name;
  }
  return "?";
}

template <typename Key, typename Table>
std::optional<Key> key_of(const Table& table, std::string_view name) {
  for (const auto& [k, n] : table) {
    if (n == name) return k;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(FormulaId id) { return name_of(kFormulaNames, id); }
std::string_view to_string(HypothesisId id) { return name_of(kHypothesisNames, id); }
std::string_view to_string(Verdict v) { return name_of(kVerdictNames, v); }

std::optional<FormulaId> parse_formula_id(std::string_view name) {
  return key_of<FormulaId>(kFormulaNames, name);
}
std::optional<HypothesisId> parse_hypothesis_id(std::string_view name) {
  return key_of<HypothesisId>(kHypothesisNames, name);
}
std::optional<Verdict> parse_verdict(std::string_view name) {
  return key_of<Verdict>(kVerdictNames, name);
}

bool VerificationReport::hypotheses_pass() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Check& c) { return c.pass; });
}

bool VerificationReport::checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string> VerificationReport::failing_hypotheses() const {
  std::vector<std::string> out;
  for (const auto& h : hypotheses) {
    if (!h.pass) out.push_back(h.name);
  }
  return out;
}

const Check* VerificationReport::find_check(std::string_view name) const {
  for (const auto* list : {&hypotheses, &checks}) {
    for (const auto& c : *list) {
      if (c.name == name) return &c;
    }
  }
  return nullptr;
}

double deviation(const ComplexMatrix& formula, const ComplexMatrix& oracle) {
  return distance(formula, oracle) / std::max(1.0, oracle.frobenius_norm());
}

Check equation_check(std::string name, const ComplexMatrix& lhs, const ComplexMatrix& rhs,
                     double scale, const Tolerance& tol) {
  const double r = scaled_residual(distance(lhs, rhs), scale);
  return {std::move(name), r, r <= tol.residual_rel};
}

Check zero_check(std::string name, const ComplexMatrix& m, double scale, const Tolerance& tol) {
  const double r = scaled_residual(m.frobenius_norm(), scale);
  return {std::move(name), r, r <= tol.residual_rel};
}

double worst_residual(const std::vector<Check>& checks) {
  double worst = 0.0;
  for (const auto& c : checks) worst = std::max(worst, c.residual);
  return worst;
}

}  // namespace drazin_lab
