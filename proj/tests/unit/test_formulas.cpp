#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "drazin_lab/drazin.hpp"
#include "drazin_lab/errors.hpp"
#include "drazin_lab/formulas.hpp"
#include "drazin_lab/generators.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "sampling.hpp"

namespace {

using namespace drazin_lab;
using fixtures::rel;

const Tolerance kTol{};

bool names(const std::vector<std::string>& list, const std::string& name) {
  return std::find(list.begin(), list.end(), name) != list.end();
}

ComplexMatrix diag_blocks(const ComplexMatrix& x, const ComplexMatrix& y) {
  return assemble_lower_triangular(x, y, ComplexMatrix(y.rows(), x.rows()));
}

const ComplexMatrix kN = ComplexMatrix::from_rows({{0, 0}, {1, 0}});

TEST(SumNilpotent, InvertiblePlusZero) {
  Rng rng(137);
  const ComplexMatrix a = well_conditioned(rng, 4);
  for (FormulaId primary : {FormulaId::SUM_NILPOTENT_RESOLVENT, FormulaId::SUM_NILPOTENT_SERIES}) {
    const VerificationReport r = sum_drazin_nilpotent(a, ComplexMatrix(4, 4), kTol, primary);
    EXPECT_EQ(r.verdict, Verdict::pass);
    ASSERT_TRUE(r.formula_output.has_value());
    EXPECT_LE(rel(*r.formula_output, inverse(a, kTol)), 1e-12);
  }
}

TEST(SumNilpotent, SwapPlusShiftIsNotMet) {
  const VerificationReport r = sum_drazin_nilpotent(fixtures::ex16_a(), fixtures::ex16_b(), kTol);
  EXPECT_EQ(r.verdict, Verdict::hypotheses_not_met);
  EXPECT_TRUE(names(r.failing_hypotheses(), "b_weak"));
  EXPECT_FALSE(r.formula_output.has_value());
}

TEST(SumNilpotent, NonNilpotentBIsNotMet) {
  const VerificationReport r = sum_drazin_nilpotent(fixtures::ex34_a(1.0), fixtures::ex34_b(1.0), kTol);
  EXPECT_EQ(r.verdict, Verdict::hypotheses_not_met);
  EXPECT_TRUE(names(r.failing_hypotheses(), "B nilpotent"));
}

TEST(SumNilpotent, ConjugationPairsMatchOracle) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const GeneratedInstance inst = generate({Family::CONJUGATION, 2 * (1 + s % 4), s, {2}});
    const VerificationReport r = sum_drazin_nilpotent(inst.a, inst.b, kTol);
    ASSERT_EQ(r.verdict, Verdict::pass) << s;
    const ComplexMatrix direct = oracle::pinv_drazin(inst.a + inst.b, 0);
    EXPECT_LE(rel(*r.formula_output, direct), 1e-9);
    EXPECT_LE(r.deviation, 1e-9);
  }
}

TEST(SumNilpotent, ResolventAndSeriesAgreeOnBlockSplit) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const GeneratedInstance inst = generate({Family::BLOCK_SPLIT, 2 + s % 7, s, {0, 0}});
    const VerificationReport res = sum_drazin_nilpotent(inst.a, inst.b, kTol);
    const VerificationReport ser =
        sum_drazin_nilpotent(inst.a, inst.b, kTol, FormulaId::SUM_NILPOTENT_SERIES);
    ASSERT_EQ(res.verdict, Verdict::pass) << s;
    ASSERT_EQ(ser.verdict, Verdict::pass) << s;
    EXPECT_LE(rel(*res.formula_output, *ser.formula_output), 1e-9);
    const ComplexMatrix o = oracle::pinv_drazin(inst.a + inst.b, oracle::svd_index(inst.a + inst.b));
    EXPECT_LE(rel(*res.formula_output, o), 1e-9);
  }
}

TEST(SumRepresentation, InvertiblePlusZeroCollapses) {
  Rng rng(139);
  const ComplexMatrix a = well_conditioned(rng, 3);
  for (FormulaId f : {FormulaId::SUM_2_9, FormulaId::COR_2_10_I, FormulaId::COR_2_10_II,
                      FormulaId::COR_2_10_III}) {
    const VerificationReport r = sum_representation(f, a, ComplexMatrix(3, 3), kTol);
    EXPECT_EQ(r.verdict, Verdict::pass) << to_string(f);
    ASSERT_TRUE(r.formula_output.has_value());
    EXPECT_LE(rel(*r.formula_output, inverse(a, kTol)), 1e-12) << to_string(f);
  }
}

TEST(SumRepresentation, BlockPairWithNilpotentBlocks) {
  // a = diag(2, N), b = diag(1, M) with M = 3N, so the nilpotent blocks commute.
  const ComplexMatrix a = diag_blocks(ComplexMatrix::from_rows({{2}}), kN);
  const ComplexMatrix b = diag_blocks(ComplexMatrix::from_rows({{1}}), 3.0 * kN);
  const ComplexMatrix expected = oracle::drazin(oracle::QMatrix::from(a + b)).to_double();
  for (FormulaId f : {FormulaId::SUM_2_9, FormulaId::COR_2_10_I, FormulaId::COR_2_10_II,
                      FormulaId::COR_2_10_III}) {
    const VerificationReport r = sum_representation(f, a, b, kTol);
    EXPECT_EQ(r.verdict, Verdict::pass) << to_string(f);
    ASSERT_TRUE(r.formula_output.has_value());
    EXPECT_LE(rel(*r.formula_output, expected), 1e-12) << to_string(f);
  }
}

TEST(SumRepresentation, CrossPatternFirstRepresentation) {
  const ComplexMatrix a = fixtures::ex34_a(1.0);
  const ComplexMatrix b = fixtures::ex34_b(1.0);
  const VerificationReport r = sum_representation(FormulaId::COR_2_10_I, a, b, kTol);
  EXPECT_EQ(r.verdict, Verdict::pass);
  const ComplexMatrix expected = oracle::drazin(oracle::QMatrix::from(a + b)).to_double();
  EXPECT_LE(rel(*r.formula_output, expected), 1e-12);
}

TEST(SumRepresentation, SeriesIndexingFindingIsReported) {
  // Invertible B2 on the nilpotent block of A keeps the series term nonzero.
  for (std::uint64_t s = 0; s < 20; ++s) {
    const GeneratedInstance inst = generate({Family::BLOCK_SPLIT, 3 + s % 6, s, {0, 1}});
    const VerificationReport r = sum_representation(FormulaId::SUM_2_9, inst.a, inst.b, kTol);
    ASSERT_EQ(r.verdict, Verdict::pass) << s;
    std::vector<std::string> indexing;
    for (const auto& n : r.notes) {
      if (n.rfind("series indexing", 0) == 0) indexing.push_back(n);
    }
    ASSERT_EQ(indexing.size(), 2U) << s;
    EXPECT_NE(indexing[0].find("(consistent)"), std::string::npos) << indexing[0];
    EXPECT_NE(indexing[1].find("(inconsistent)"), std::string::npos) << indexing[1];
  }
}

TEST(SumRepresentation, NotMetWithoutBothRelations) {
  for (FormulaId f : {FormulaId::SUM_2_9, FormulaId::COR_2_10_I, FormulaId::COR_2_10_II,
                      FormulaId::COR_2_10_III}) {
    const VerificationReport r = sum_representation(f, fixtures::ex16_a(), fixtures::ex16_b(), kTol);
    EXPECT_EQ(r.verdict, Verdict::hypotheses_not_met) << to_string(f);
  }
}

TEST(SumRepresentation, RejectsOtherIds) {
  EXPECT_THROW(sum_representation(FormulaId::PRODUCT_3_3, fixtures::ex16_a(), fixtures::ex16_a(), kTol),
               std::invalid_argument);
}

TEST(Product, CrossPatternAtOne) {
  const VerificationReport r = product_drazin(fixtures::ex34_a(1.0), fixtures::ex34_b(1.0), kTol);
  EXPECT_EQ(r.verdict, Verdict::pass);
  ASSERT_TRUE(r.formula_output.has_value());
  EXPECT_LE(rel(*r.formula_output, fixtures::ex34_abd(1.0, 1.0)), 1e-14);
  EXPECT_LE(rel(*r.oracle_output, fixtures::ex34_abd(1.0, 1.0)), 1e-14);
}

TEST(Product, CommutingPolynomials) {
  Rng rng(149);
  for (int t = 0; t < 30; ++t) {
    const ComplexMatrix a = random_drazin_matrix(rng, 2 + t % 6, static_cast<DrazinKind>(t % 3));
    const ComplexMatrix b = a * a + 2.0 * a;
    const VerificationReport r = product_drazin(a, b, kTol);
    ASSERT_EQ(r.verdict, Verdict::pass) << t;
    // A^2 can vanish up to roundoff, so the product is judged against the factor norms.
    const double scale = spectral_norm(a) * spectral_norm(b);
    EXPECT_LE(rel(*r.formula_output, oracle::float_drazin(a * b, scale)), 1e-9) << t;
  }
}

TEST(Product, CrossPatternRandomParameters) {
  Rng rng(151);
  for (int t = 0; t < 20; ++t) {
    const Complex x = fixtures::nonzero(rng);
    const Complex y = fixtures::nonzero(rng);
    const VerificationReport r = product_drazin(fixtures::ex34_a(x), fixtures::ex34_b(y), kTol);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_LE(rel(*r.formula_output, fixtures::ex34_abd(x, y)), 1e-12);
  }
}

TEST(Product, ProofNilpotencyChecks) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const GeneratedInstance inst = generate({Family::BLOCK_SPLIT, 2 + s % 7, s, {static_cast<double>(s % 5), 0}});
    const VerificationReport r = product_drazin(inst.a, inst.b, kTol);
    ASSERT_EQ(r.verdict, Verdict::pass) << s;
    for (const char* name : {"(A - A^2A^D)B nilpotent", "A^2A^D(B - B^2B^D) nilpotent",
                             "(A - A^2A^D)B A^2A^D(B - B^2B^D) = 0", "AB - AB X AB nilpotent"}) {
      const Check* c = r.find_check(name);
      ASSERT_NE(c, nullptr) << name;
      EXPECT_TRUE(c->pass) << name;
    }
  }
}

TEST(Involutory, EqualInvolutions) {
  Rng rng(157);
  const ComplexMatrix p = well_conditioned(rng, 3);
  const ComplexMatrix a = p * ComplexMatrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}) * inverse(p, kTol);
  const VerificationReport r = involutory_sum(a, a, kTol);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_LE(rel(*r.formula_output, 0.5 * a), 1e-12);
}

TEST(Involutory, ThreeByThreeInvolutionPair) {
  const ComplexMatrix t = fixtures::ex43_t();
  const ComplexMatrix s = fixtures::ex43_s();
  const VerificationReport r = involutory_sum(t, s, kTol);
  EXPECT_TRUE(r.hypotheses_pass());
  EXPECT_EQ(r.verdict, Verdict::pass);
  const ComplexMatrix expected = oracle::drazin(oracle::QMatrix::from(t + s)).to_double();
  EXPECT_LE(rel(*r.formula_output, expected), 1e-10);
}

TEST(Involutory, NegatedPairSumsToZero) {
  const ComplexMatrix t = fixtures::ex43_t();
  const VerificationReport r = involutory_sum(t, -t, kTol);
  EXPECT_TRUE(r.hypotheses_pass());
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_LE(r.formula_output->frobenius_norm(), 1e-14);
  EXPECT_LE(r.oracle_output->frobenius_norm(), 1e-14);
}

TEST(Involutory, NamesFailingCondition) {
  const VerificationReport r = involutory_sum(2.0 * fixtures::ex43_t(), fixtures::ex43_s(), kTol);
  EXPECT_EQ(r.verdict, Verdict::hypotheses_not_met);
  EXPECT_TRUE(names(r.failing_hypotheses(), "A^2 = I"));
  EXPECT_FALSE(names(r.failing_hypotheses(), "B^2 = I"));
}

TEST(Cline, CommutingPair) {
  Rng rng(163);
  const ComplexMatrix a = random_drazin_matrix(rng, 4, DrazinKind::mixed);
  const ComplexMatrix b = a * a + 2.0 * a;
  const VerificationReport r = cline_transfer(a, b, kTol);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_LE(rel(*r.formula_output, drazin_inverse(a * b, kTol).d_inverse), 1e-9);
}

TEST(Cline, TwoByTwoShift) {
  const ComplexMatrix a = ComplexMatrix::from_rows({{0, 1}, {0, 0}});
  const ComplexMatrix b = ComplexMatrix::from_rows({{0, 0}, {1, 0}});
  const VerificationReport r = cline_transfer(a, b, kTol);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_LE(distance(*r.formula_output, ComplexMatrix::from_rows({{0, 0}, {0, 1}})), 1e-15);
}

TEST(Cline, SeededPairs) {
  Rng rng(167);
  for (int t = 0; t < 100; ++t) {
    const Index n = 2 + static_cast<Index>(t % 5);
    const ComplexMatrix a = random_drazin_matrix(rng, n, static_cast<DrazinKind>(t % 3));
    const ComplexMatrix b = random_drazin_matrix(rng, n, static_cast<DrazinKind>((t / 3) % 3));
    const VerificationReport r = cline_transfer(a, b, kTol);
    EXPECT_EQ(r.verdict, Verdict::pass);
    const ComplexMatrix ba = b * a;
    EXPECT_LE(rel(*r.formula_output, oracle::pinv_drazin(ba, oracle::svd_index(ba))), 1e-9);
  }
}

TEST(Cline, SimilarityTransferWithInvertibleA) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const GeneratedInstance inst = generate({Family::CONJUGATION, 2 + s % 5, s, {static_cast<double>(s % 3)}});
    const VerificationReport r = cline_transfer(inst.a, inst.b, kTol, inst.c);
    EXPECT_EQ(r.verdict, Verdict::pass);
    const Check* c = r.find_check("(A+B)^D = A^{-1}(A+C)^D A");
    ASSERT_NE(c, nullptr);
    EXPECT_TRUE(c->pass);
  }
}

TEST(Cline, DimensionMismatch) {
  EXPECT_THROW(cline_transfer(ComplexMatrix::identity(2), ComplexMatrix::identity(3), kTol),
               DimensionError);
}

TEST(BlockFormula, MatchesAssembly) {
  Rng rng(173);
  const ComplexMatrix a1 = random_drazin_matrix(rng, 3, DrazinKind::mixed);
  const ComplexMatrix a2 = random_drazin_matrix(rng, 3, DrazinKind::nilpotent);
  const VerificationReport r = block_formula(a1, a2, gaussian_matrix(rng, 3, 3), kTol);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_LE(r.deviation, 1e-9);
}

TEST(Hypotheses, ThreeInputCommutingInvertible) {
  Rng rng(179);
  const ComplexMatrix a = random_drazin_matrix(rng, 4, DrazinKind::mixed);
  const ComplexMatrix b = a * a + 3.0 * ComplexMatrix::identity(4);
  ASSERT_TRUE(is_invertible(b, kTol));
  const std::vector<ComplexMatrix> in{a, b, b};
  const VerificationReport r = check_hypotheses(HypothesisId::PROP_4_5, in, kTol);
  EXPECT_EQ(r.verdict, Verdict::pass);
}

TEST(Hypotheses, CoreAnnihilatorBlockConstruction) {
  const ComplexMatrix a = diag_blocks(ComplexMatrix::from_rows({{2}}), kN);
  const ComplexMatrix b = diag_blocks(ComplexMatrix::from_rows({{0}}), -2.0 * kN);
  const std::vector<ComplexMatrix> in{a, b};
  const VerificationReport r = check_hypotheses(HypothesisId::THM_2_12, in, kTol);
  EXPECT_TRUE(r.hypotheses_pass());
  EXPECT_EQ(r.verdict, Verdict::pass);
  for (const char* name : {"A1 B1 = 0", "A1 + B1 invertible"}) {
    const Check* c = r.find_check(name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_TRUE(c->pass);
  }
}

TEST(Hypotheses, ProductHypothesesOnSwapShift) {
  const std::vector<ComplexMatrix> in{fixtures::ex16_a(), fixtures::ex16_b()};
  const VerificationReport r = check_hypotheses(HypothesisId::COR_3_5, in, kTol);
  EXPECT_EQ(r.verdict, Verdict::hypotheses_not_met);
  EXPECT_FALSE(r.failing_hypotheses().empty());
}

TEST(Hypotheses, ArityChecked) {
  const std::vector<ComplexMatrix> two{fixtures::ex16_a(), fixtures::ex16_b()};
  EXPECT_THROW(check_hypotheses(HypothesisId::PROP_4_5, two, kTol), ArityError);
  const std::vector<ComplexMatrix> three{fixtures::ex16_a(), fixtures::ex16_b(), fixtures::ex16_c()};
  EXPECT_THROW(check_hypotheses(HypothesisId::COR_3_5, three, kTol), ArityError);
  EXPECT_THROW(evaluate("NOT_AN_ID", two, kTol), std::invalid_argument);
  EXPECT_EQ(expected_arity("BLOCK_2_2"), 3U);
  EXPECT_EQ(expected_arity("PRODUCT_3_3"), 2U);
  EXPECT_FALSE(expected_arity("nope").has_value());
}

TEST(Hypotheses, SumConditionsReportConsistency) {
  const GeneratedInstance inst = generate({Family::BLOCK_SPLIT, 5, 7, {2, 0}});
  const std::vector<ComplexMatrix> in{inst.a, inst.b};
  const VerificationReport r = check_hypotheses(HypothesisId::THM_2_7, in, kTol);
  EXPECT_EQ(r.verdict, Verdict::pass);
  const bool says_consistency = std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) {
    return n.find("consistency") != std::string::npos;
  });
  EXPECT_TRUE(says_consistency);
}

TEST(Ids, RoundTripNames) {
  for (FormulaId f : kAllFormulas) EXPECT_EQ(parse_formula_id(to_string(f)), f);
  for (HypothesisId h : kAllHypotheses) EXPECT_EQ(parse_hypothesis_id(to_string(h)), h);
  EXPECT_EQ(to_string(Verdict::hypotheses_not_met), "hypotheses-not-met");
}

// Structural facts about nilpotent and weakly commutative pairs.

TEST(Structure, NilpotentSumWithZeroProduct) {
  Rng rng(181);
  for (int t = 0; t < 100; ++t) {
    const Index n = 2 + static_cast<Index>(t % 7);
    const ComplexMatrix a = random_drazin_matrix(rng, n, DrazinKind::nilpotent);
    // B = v w^* with Av = 0 and w^* v = 0: B^2 = 0 and AB = 0.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.eigen(), Eigen::ComputeFullV);
    const Eigen::VectorXcd v = svd.matrixV().col(n - 1);
    Eigen::VectorXcd w = gaussian_matrix(rng, n, 1).eigen();
    w -= v * (v.adjoint() * w);
    const ComplexMatrix b(Eigen::MatrixXcd(v * w.adjoint()));
    ASSERT_LE((a * b).frobenius_norm(), 1e-12 * a.frobenius_norm() * b.frobenius_norm());
    const ComplexMatrix sum = a + b;
    const auto nil = nilpotency(sum, kTol, a.frobenius_norm() + b.frobenius_norm());
    EXPECT_TRUE(nil.nilpotent);
    const double scale = std::pow(a.frobenius_norm() + b.frobenius_norm(), static_cast<double>(n));
    EXPECT_LE(matrix_power(sum, static_cast<std::size_t>(n)).frobenius_norm(), 1e-10 * scale);
  }
}

TEST(Structure, AWeakWithNilpotentAGivesNilpotentProduct) {
  Rng rng(191);
  for (int t = 0; t < 60; ++t) {
    const Index n = 2 + static_cast<Index>(t % 6);
    const ComplexMatrix a = random_drazin_matrix(rng, n, DrazinKind::nilpotent);
    const auto [b, c] = sampling::weak_pair(a, rng);
    ASSERT_TRUE(solve_witness(a, b, kTol).exists());
    const ComplexMatrix ab = a * b;
    const auto nil = nilpotency(ab, kTol, a.frobenius_norm() * b.frobenius_norm());
    EXPECT_TRUE(nil.nilpotent) << t;
  }
}

TEST(Structure, AbWeakNilpotentPairHasNilpotentSum) {
  // Both A and B nilpotent; the argument bounds every word of length 3k.
  Rng rng(193);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 40; ++t) {
    const Index n = 2 + static_cast<Index>(t % 5);
    const ComplexMatrix a = random_drazin_matrix(rng, n, DrazinKind::nilpotent);
    ComplexMatrix b;
    if (t % 2 == 0) {
      b = rng.complex_normal() * a + rng.complex_normal() * a * a;
    } else {
      b = sampling::weak_pair(a, rng).first;
    }
    const double scale = a.frobenius_norm() + b.frobenius_norm();
    if (!nilpotency(b, kTol, b.frobenius_norm()).nilpotent) continue;
    if (!classify_pair(a, b, kTol).has(RelationFlag::ab_weak)) continue;
    ++checked;
    const ComplexMatrix big = matrix_power(a + b, 3 * static_cast<std::size_t>(n));
    EXPECT_EQ(rank_against(big, kTol, std::pow(scale, 3.0 * static_cast<double>(n))), 0U);
  }
  EXPECT_GE(checked, 20);
}

TEST(Structure, BWeakWithNilpotentBAloneDoesNotForceNilpotentSum) {
  // The nilpotency of A + B needs A nilpotent as well: A = I, B = 0 is
  // {A,B}-weakly commutative with B nilpotent.
  const ComplexMatrix a = ComplexMatrix::identity(2);
  const ComplexMatrix b(2, 2);
  EXPECT_TRUE(classify_pair(a, b, kTol).has(RelationFlag::ab_weak));
  EXPECT_FALSE(nilpotency(a + b, kTol).nilpotent);
}

TEST(Structure, OppositeShiftsSumNotNilpotent) {
  const ComplexMatrix a = fixtures::ex24_a();
  const ComplexMatrix b = fixtures::ex24_b();
  EXPECT_TRUE(nilpotency(a, kTol).nilpotent);
  EXPECT_TRUE(nilpotency(b, kTol).nilpotent);
  EXPECT_EQ(distance(a * a * b, b * a * a), 0.0);
  EXPECT_EQ(distance(a * b * b, b * b * a), 0.0);
  EXPECT_FALSE(nilpotency(a + b, kTol).nilpotent);
  EXPECT_EQ(rank(matrix_power(a + b, 2), kTol), 2U);
}

TEST(Structure, InvertiblePlusBWeakNilpotentIsInvertible) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Index n = 2 * static_cast<Index>(1 + s % 4);
    const GeneratedInstance inst = generate({Family::CONJUGATION, static_cast<std::size_t>(n), s, {2}});
    const ComplexMatrix& a = inst.a;
    const ComplexMatrix& b = inst.b;
    ASSERT_TRUE(classify_pair(a, b, kTol).has(RelationFlag::b_weak));
    const ComplexMatrix sum = a + b;
    EXPECT_EQ(rank(sum, kTol), static_cast<std::size_t>(n));
    // (I + A^{-1}B)^{-1} = sum_j (-A^{-2} AB)^j, a finite sum.
    const ComplexMatrix ainv = inverse(a, kTol);
    const ComplexMatrix step = -1.0 * ainv * ainv * a * b;
    ComplexMatrix term = ComplexMatrix::identity(n);
    ComplexMatrix series = term;
    for (Index j = 1; j < n; ++j) {
      term = term * step;
      series += term;
    }
    const ComplexMatrix direct = inverse(ComplexMatrix::identity(n) + ainv * b, kTol);
    EXPECT_LE(rel(series, direct), 1e-9) << s;
  }
}

TEST(Structure, SwapPlusShiftSingular) {
  const ComplexMatrix sum = fixtures::ex16_a() + fixtures::ex16_b();
  EXPECT_EQ(rank(sum, kTol), 1U);
  EXPECT_FALSE(is_invertible(sum, kTol));
  EXPECT_FALSE(classify_pair(fixtures::ex16_a(), fixtures::ex16_b(), kTol).has(RelationFlag::b_weak));
}

}  // namespace
