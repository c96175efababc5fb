#include "drazin_lab/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "drazin_lab/drazin.hpp"
#include "drazin_lab/errors.hpp"
#include "drazin_lab/weakcommute.hpp"

namespace drazin_lab {
namespace {

void require_pair(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    std::ostringstream msg;
    msg << op << ": expected two square matrices of equal size, got " << a.rows() << "x" << a.cols()
        << " and " << b.rows() << "x" << b.cols();
    throw DimensionError(msg.str());
  }
}

Check deviation_check(std::string name, const ComplexMatrix& formula, const ComplexMatrix& oracle,
                      const Tolerance& tol) {
  const double d = deviation(formula, oracle);
  return {std::move(name), d, d <= tol.residual_rel};
}

Check witness_check(std::string name, const WitnessResult& w) {
  return {std::move(name), w.normalized_residual(), w.exists()};
}

Check nilpotent_check(std::string name, const ComplexMatrix& m, double scale,
                      const Tolerance& tol) {
  const auto nil = nilpotency(m, tol, scale);
  return {std::move(name), nil.residual, nil.nilpotent};
}

// `scale` bounds the norm of the factors `m` was computed from.
Check invertible_check(std::string name, const ComplexMatrix& m, const Tolerance& tol,
                       double scale = 0.0) {
  const auto r = rank_against(m, tol, std::max(spectral_norm(m), scale));
  return {std::move(name), static_cast<double>(static_cast<std::size_t>(m.rows()) - r),
          r == static_cast<std::size_t>(m.rows())};
}

std::vector<Check> both_weak(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  return {witness_check("a_weak", solve_witness(a, b, tol)),
          witness_check("b_weak", solve_witness(b, a, tol))};
}

VerificationReport not_met(std::string formula, std::vector<Check> hypotheses) {
  VerificationReport r;
  r.formula = std::move(formula);
  r.hypotheses = std::move(hypotheses);
  r.verdict = Verdict::hypotheses_not_met;
  return r;
}

void finish(VerificationReport& r) {
  r.verdict = r.checks_pass() ? Verdict::pass : Verdict::fail;
}

// Finite series with n-th term (A^D)^{2n} (-AB)^n R (left) or
// L (-AB)^n (B^D)^{2n} (right), for n < max_terms. The anchored product
// (-AB)^n R or L (-AB)^n vanishes beyond some n in exact arithmetic, and then
// so does every later term. Once it is zero up to the roundoff of its own
// computation the sum stops: the remaining terms would only contribute that
// roundoff amplified by powers of the Drazin factor. `anchor_scale` bounds
// the factor norms R or L was computed from.
struct Series {
  ComplexMatrix sum;
  std::size_t terms = 0;
};

bool vanished(const ComplexMatrix& m, double bound, const Tolerance& tol) {
  return spectral_norm(m) <= tol.rank_rel * static_cast<double>(m.rows()) * bound;
}

Series left_series(const ComplexMatrix& ad, const ComplexMatrix& ab, const ComplexMatrix& anchor,
                   double anchor_scale, std::size_t max_terms, const Tolerance& tol) {
  const ComplexMatrix ad2 = ad * ad;
  const ComplexMatrix neg_ab = -ab;
  const double nab = spectral_norm(ab);
  Series out{ComplexMatrix(anchor.rows(), anchor.cols()), 0};
  ComplexMatrix inner = anchor;  // (-AB)^n R
  ComplexMatrix outer = ComplexMatrix::identity(ad.rows());
  double bound = std::max(spectral_norm(anchor), anchor_scale);
  for (std::size_t k = 0; k < max_terms; ++k) {
    if (k > 0 && vanished(inner, bound, tol)) break;
    out.sum += outer * inner;
    ++out.terms;
    inner = neg_ab * inner;
    outer = outer * ad2;
    bound *= nab;
  }
  return out;
}

Series right_series(const ComplexMatrix& bd, const ComplexMatrix& ab, const ComplexMatrix& anchor,
                    double anchor_scale, std::size_t max_terms, const Tolerance& tol) {
  const ComplexMatrix bd2 = bd * bd;
  const ComplexMatrix neg_ab = -ab;
  const double nab = spectral_norm(ab);
  Series out{ComplexMatrix(anchor.rows(), anchor.cols()), 0};
  ComplexMatrix inner = anchor;  // L (-AB)^n
  ComplexMatrix outer = ComplexMatrix::identity(bd.rows());
  double bound = std::max(spectral_norm(anchor), anchor_scale);
  for (std::size_t k = 0; k < max_terms; ++k) {
    if (k > 0 && vanished(inner, bound, tol)) break;
    out.sum += inner * outer;
    ++out.terms;
    inner = inner * neg_ab;
    outer = outer * bd2;
    bound *= nab;
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::string series_note(const char* name, const Series& series, std::size_t max_terms) {
  return std::string(name) + " series: " + std::to_string(series.terms) + " of " +
         std::to_string(max_terms) +
         " terms (n = 0..dim-1); later terms vanish to roundoff and are not added";
}

// Core-nilpotent split of A together with B expressed in the same basis.
// a_scale and scale bound the norms of the blocks of A and B.
struct SplitPair {
  CoreNilpotentSplit split;
  SplitBlocks b;
  double a_scale = 0.0;
  double scale = 0.0;
};

SplitPair split_pair(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  SplitPair out{core_nilpotent_split(a, tol), {}, 0.0, 0.0};
  out.b = split_blocks(out.split, b);
  const double cond = out.split.basis_change.frobenius_norm() *
                      out.split.basis_change_inverse.frobenius_norm();
  out.a_scale = cond * a.frobenius_norm();
  out.scale = cond * b.frobenius_norm();
  return out;
}

double sum_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return spectral_norm(a) + spectral_norm(b);
}

ComplexMatrix from_blocks(const CoreNilpotentSplit& split, const ComplexMatrix& core,
                          const ComplexMatrix& nil) {
  const Index n = split.basis_change.rows();
  const Index r = core.rows();
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
  if (r > 0) t.topLeftCorner(r, r) = core.eigen();
  if (n - r > 0) t.bottomRightCorner(n - r, n - r) = nil.eigen();
  return split.basis_change * ComplexMatrix(std::move(t)) * split.basis_change_inverse;
}

void add_block_diagonal_check(VerificationReport& r, const SplitPair& sp, const Tolerance& tol) {
  const double off = std::hypot(sp.b.upper.frobenius_norm(), sp.b.lower.frobenius_norm());
  const double res = scaled_residual(off, sp.scale);
  r.checks.push_back({"B block-diagonal in the core-nilpotent basis of A", res,
                      res <= tol.residual_rel});
}

VerificationReport thm_2_7(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  auto hyps = both_weak(a, b, tol);
  VerificationReport r;
  r.formula = "THM_2_7";
  r.hypotheses = hyps;
  if (!r.hypotheses_pass()) return not_met(r.formula, std::move(hyps));
  r.notes.push_back(
      "every square matrix is Drazin invertible, so the four conditions hold trivially; "
      "the conclusion is checked as consistency of the three (A+B)^D representations");
  for (auto id : {FormulaId::COR_2_10_I, FormulaId::COR_2_10_II, FormulaId::COR_2_10_III}) {
    const auto sub = sum_representation(id, a, b, tol);
    r.checks.push_back({std::string(to_string(id)) + " reproduces (A+B)^D", sub.deviation,
                        sub.verdict == Verdict::pass});
  }
  r.deviation = worst_residual(r.checks);
  finish(r);
  return r;
}

VerificationReport thm_2_11(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                            const Tolerance& tol) {
  const Index n = a.rows();
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();
  const double nc = c.frobenius_norm();
  const DrazinResult ad = drazin_inverse(a, tol);
  const ComplexMatrix p = a * ad.d_inverse;
  const ComplexMatrix& pi = ad.projector;
  const ComplexMatrix comm2 = a * a * b - b * a * a;

  VerificationReport r;
  r.formula = "THM_2_11";
  r.hypotheses.push_back(nilpotent_check("B nilpotent", b, nb, tol));
  r.hypotheses.push_back(witness_check("b_weak", solve_witness(b, a, tol)));
  const double cubic = p.frobenius_norm() * na * na * nb;
  r.hypotheses.push_back(zero_check("AA^D(A^2B - BA^2) = 0", p * comm2, cubic, tol));
  r.hypotheses.push_back(zero_check("(A^2B - BA^2)AA^D = 0", comm2 * p, cubic, tol));
  const double lin = pi.frobenius_norm() * na * std::max(nb, nc);
  r.hypotheses.push_back(zero_check("A^pi(AB - CA) = 0", pi * (a * b - c * a), lin, tol));
  r.hypotheses.push_back(zero_check("A^pi(BA - AC) = 0", pi * (b * a - a * c), lin, tol));
  if (!r.hypotheses_pass()) return not_met(r.formula, std::move(r.hypotheses));

  const SplitPair sp = split_pair(a, b, tol);
  add_block_diagonal_check(r, sp, tol);
  const ComplexMatrix core_sum = sp.split.core_block + sp.b.core;
  const ComplexMatrix nil_sum = sp.split.nilpotent_block + sp.b.nilpotent;
  const double block_scale = sp.a_scale + sp.scale;
  r.checks.push_back(invertible_check("A1 + B1 invertible", core_sum, tol, block_scale));
  r.checks.push_back(nilpotent_check("A2 + B2 nilpotent", nil_sum, block_scale, tol));
  if (r.checks_pass()) {
    const ComplexMatrix assembled =
        from_blocks(sp.split, inverse(core_sum, tol), ComplexMatrix(nil_sum.rows(), nil_sum.cols()));
    const ComplexMatrix oracle = drazin_inverse(a + b, tol, sum_norm(a, b)).d_inverse;
    r.checks.push_back(deviation_check("(A+B)^D = (A1+B1)^{-1} (+) 0", assembled, oracle, tol));
    r.formula_output = assembled;
    r.oracle_output = oracle;
    r.deviation = deviation(assembled, oracle);
  }
  (void)n;
  finish(r);
  return r;
}

VerificationReport thm_2_12(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  const DrazinResult ad = drazin_inverse(a, tol);
  const ComplexMatrix p = a * ad.d_inverse;
  const ComplexMatrix& pi = ad.projector;

  VerificationReport r;
  r.formula = "THM_2_12";
  r.hypotheses.push_back(witness_check("a_weak", solve_witness(a, b, tol)));
  const double pi_scale = static_cast<double>(a.rows()) * pi.frobenius_norm() *
                          pi.frobenius_norm() * a.frobenius_norm() * b.frobenius_norm();
  r.hypotheses.push_back(witness_check("A^pi B-weak (A^pi A, A^pi B)",
                                       solve_witness(pi * b, pi * a, tol, pi_scale)));
  r.hypotheses.push_back(zero_check("AA^D A B = 0", p * a * b,
                                    p.frobenius_norm() * a.frobenius_norm() * b.frobenius_norm(),
                                    tol));
  if (!r.hypotheses_pass()) return not_met(r.formula, std::move(r.hypotheses));

  const SplitPair sp = split_pair(a, b, tol);
  add_block_diagonal_check(r, sp, tol);
  r.checks.push_back(zero_check("A1 B1 = 0", sp.split.core_block * sp.b.core,
                                sp.split.core_block.frobenius_norm() * sp.scale, tol));
  const ComplexMatrix core_sum = sp.split.core_block + sp.b.core;
  const double block_scale = sp.a_scale + sp.scale;
  r.checks.push_back(invertible_check("A1 + B1 invertible", core_sum, tol, block_scale));
  if (r.checks_pass()) {
    const ComplexMatrix nil_sum = sp.split.nilpotent_block + sp.b.nilpotent;
    const ComplexMatrix nil_d =
        nil_sum.empty() ? nil_sum : drazin_inverse(nil_sum, tol, block_scale).d_inverse;
    const ComplexMatrix assembled = from_blocks(sp.split, inverse(core_sum, tol), nil_d);
    const ComplexMatrix oracle = drazin_inverse(a + b, tol, sum_norm(a, b)).d_inverse;
    r.checks.push_back(
        deviation_check("(A+B)^D = (A1+B1)^{-1} (+) (A2+B2)^D", assembled, oracle, tol));
    r.formula_output = assembled;
    r.oracle_output = oracle;
    r.deviation = deviation(assembled, oracle);
  }
  finish(r);
  return r;
}

VerificationReport cor_3_5(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  const DrazinResult ad = drazin_inverse(a, tol);
  const ComplexMatrix p = a * ad.d_inverse;

  VerificationReport r;
  r.formula = "COR_3_5";
  r.hypotheses.push_back(witness_check("a_weak", solve_witness(a, b, tol)));
  const double p_scale = static_cast<double>(a.rows()) * p.frobenius_norm() * p.frobenius_norm() *
                         a.frobenius_norm() * b.frobenius_norm();
  r.hypotheses.push_back(witness_check("AA^D B-weak (AA^D A, AA^D B)",
                                       solve_witness(p * b, p * a, tol, p_scale)));
  if (!r.hypotheses_pass()) return not_met(r.formula, std::move(r.hypotheses));

  const ComplexMatrix formula = drazin_inverse(b, tol).d_inverse * ad.d_inverse;
  const ComplexMatrix oracle =
      drazin_inverse(a * b, tol, spectral_norm(a) * spectral_norm(b)).d_inverse;
  r.checks.push_back(deviation_check("(AB)^D = B^D A^D", formula, oracle, tol));
  r.formula_output = formula;
  r.oracle_output = oracle;
  r.deviation = deviation(formula, oracle);
  finish(r);
  return r;
}

VerificationReport thm_4_4(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                           const Tolerance& tol) {
  const double na = a.frobenius_norm();
  const double scale = na * std::max(b.frobenius_norm(), c.frobenius_norm());

  VerificationReport r;
  r.formula = "THM_4_4";
  r.hypotheses.push_back(invertible_check("B invertible", b, tol));
  r.hypotheses.push_back(invertible_check("C invertible", c, tol));
  r.hypotheses.push_back(equation_check("AB = CA", a * b, c * a, scale, tol));
  r.hypotheses.push_back(equation_check("BA = AC", b * a, a * c, scale, tol));
  r.hypotheses.push_back({"AA^D(A+B) Drazin invertible", 0.0, true});
  if (!r.hypotheses_pass()) return not_met(r.formula, std::move(r.hypotheses));
  r.notes.push_back("AA^D(A+B) is Drazin invertible for every square matrix");

  const SplitPair sp = split_pair(a, b, tol);
  add_block_diagonal_check(r, sp, tol);
  const ComplexMatrix& a2 = sp.split.nilpotent_block;
  const ComplexMatrix& b2 = sp.b.nilpotent;
  const double block_scale = sp.a_scale + sp.scale;
  if (!a2.empty()) {
    r.checks.push_back(invertible_check("B2 invertible", b2, tol, sp.scale));
    if (r.checks_pass()) {
      const ComplexMatrix b2_inv = inverse(b2, tol);
      r.checks.push_back(nilpotent_check("A2 B2^{-1} nilpotent", a2 * b2_inv,
                                         sp.a_scale * b2_inv.frobenius_norm(), tol));
    }
    r.checks.push_back(invertible_check("A2 + B2 invertible", a2 + b2, tol, block_scale));
  }
  if (r.checks_pass()) {
    const ComplexMatrix core_sum = sp.split.core_block + sp.b.core;
    const ComplexMatrix core_d =
        core_sum.empty() ? core_sum : drazin_inverse(core_sum, tol, block_scale).d_inverse;
    const ComplexMatrix nil_inv = a2.empty() ? a2 : inverse(a2 + b2, tol);
    const ComplexMatrix assembled = from_blocks(sp.split, core_d, nil_inv);
    const ComplexMatrix oracle = drazin_inverse(a + b, tol, sum_norm(a, b)).d_inverse;
    r.checks.push_back(
        deviation_check("(A+B)^D = (A1+B1)^D (+) (A2+B2)^{-1}", assembled, oracle, tol));
    r.formula_output = assembled;
    r.oracle_output = oracle;
    r.deviation = deviation(assembled, oracle);
  }
  finish(r);
  return r;
}

VerificationReport prop_4_5(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                            const Tolerance& tol) {
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();
  const double nc = c.frobenius_norm();
  const double scale = na * std::max(nb, nc);

  VerificationReport r;
  r.formula = "PROP_4_5";
  r.hypotheses.push_back(invertible_check("B invertible", b, tol));
  r.hypotheses.push_back(invertible_check("C invertible", c, tol));
  r.hypotheses.push_back(equation_check("BC = CB", b * c, c * b, nb * nc, tol));
  r.hypotheses.push_back(equation_check("AB = CA", a * b, c * a, scale, tol));
  r.hypotheses.push_back(equation_check("BA = AC", b * a, a * c, scale, tol));
  if (!r.hypotheses_pass()) return not_met(r.formula, std::move(r.hypotheses));

  const ComplexMatrix m = a * b;
  const ComplexMatrix nmat = b * a;
  r.checks.push_back(equation_check("A^2B = ACA", a * m, a * c * a, na * scale, tol));
  r.checks.push_back(equation_check("ABA = A^2C", a * nmat, a * a * c, na * scale, tol));
  r.checks.push_back(witness_check("A, AB weakly commutative (A-witness)", solve_witness(a, m, tol)));
  r.checks.push_back(witness_check("A, AB weakly commutative (AB-witness)", solve_witness(m, a, tol)));
  r.checks.push_back(witness_check("A, BA weakly commutative (A-witness)", solve_witness(a, nmat, tol)));
  r.checks.push_back(witness_check("A, BA weakly commutative (BA-witness)", solve_witness(nmat, a, tol)));
  const double sa = spectral_norm(a);
  const double cubic = sa * sa * spectral_norm(b);
  for (const auto& [name, prod] : {std::pair{"Drazin axioms for A^2B", a * m},
                                   std::pair{"Drazin axioms for ABA", a * nmat}}) {
    const DrazinResult dr = drazin_inverse(prod, tol, cubic);
    const auto axioms = verify_drazin_axioms(prod, dr.d_inverse, dr.index, tol, cubic);
    r.checks.push_back({name, axioms.deviation, axioms.verdict == Verdict::pass});
  }
  r.deviation = worst_residual(r.checks);
  finish(r);
  return r;
}

}  // namespace

VerificationReport sum_drazin_nilpotent(const ComplexMatrix& a, const ComplexMatrix& b,
                                        const Tolerance& tol, FormulaId primary) {
  require_pair(a, b, "sum_drazin_nilpotent");
  if (primary != FormulaId::SUM_NILPOTENT_RESOLVENT && primary != FormulaId::SUM_NILPOTENT_SERIES) {
    throw std::invalid_argument("sum_drazin_nilpotent: primary must be a SUM_NILPOTENT_* id");
  }
  VerificationReport r;
  r.formula = std::string(to_string(primary));
  r.hypotheses.push_back(nilpotent_check("B nilpotent", b, b.frobenius_norm(), tol));
  for (auto& h : both_weak(a, b, tol)) r.hypotheses.push_back(std::move(h));
  if (!r.hypotheses_pass()) return not_met(r.formula, std::move(r.hypotheses));

  const Index n = a.rows();
  const ComplexMatrix ad = drazin_inverse(a, tol).d_inverse;
  const ComplexMatrix resolvent =
      inverse(ComplexMatrix::identity(n) + ad * b, tol) * ad;
  const auto terms = static_cast<std::size_t>(n);
  const Series left = left_series(ad, a * b, ad, spectral_norm(ad), terms, tol);
  const ComplexMatrix& series = left.sum;
  const ComplexMatrix oracle = drazin_inverse(a + b, tol, sum_norm(a, b)).d_inverse;

  r.checks.push_back(deviation_check("resolvent form = (A+B)^D", resolvent, oracle, tol));
  r.checks.push_back(deviation_check("series form = (A+B)^D", series, oracle, tol));
  r.checks.push_back(deviation_check("resolvent form = series form", resolvent, series, tol));
  r.notes.push_back(series_note("(A^D)^{2n}(-AB)^n A^D", left, terms));
  r.formula_output = primary == FormulaId::SUM_NILPOTENT_SERIES ? series : resolvent;
  r.oracle_output = oracle;
  r.deviation = deviation(*r.formula_output, oracle);
  finish(r);
  return r;
}

VerificationReport sum_representation(FormulaId formula, const ComplexMatrix& a,
                                      const ComplexMatrix& b, const Tolerance& tol) {
  require_pair(a, b, "sum_representation");
  if (formula != FormulaId::SUM_2_9 && formula != FormulaId::COR_2_10_I &&
      formula != FormulaId::COR_2_10_II && formula != FormulaId::COR_2_10_III) {
    throw std::invalid_argument("sum_representation: unsupported formula " +
                                std::string(to_string(formula)));
  }
  VerificationReport r;
  r.formula = std::string(to_string(formula));
  r.hypotheses = both_weak(a, b, tol);
  if (!r.hypotheses_pass()) return not_met(r.formula, std::move(r.hypotheses));

  const Index n = a.rows();
  const auto terms = static_cast<std::size_t>(n);
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  const ComplexMatrix ad = drazin_inverse(a, tol).d_inverse;
  const ComplexMatrix bd = drazin_inverse(b, tol).d_inverse;
  const ComplexMatrix p = a * ad;
  const ComplexMatrix q = b * bd;
  const ComplexMatrix ab = a * b;
  const ComplexMatrix sum = a + b;
  const double sa = spectral_norm(a);
  const double sb = spectral_norm(b);
  const double sad = spectral_norm(ad);
  const double sp = spectral_norm(p);
  const double sq = spectral_norm(q);
  const auto d = [&](const ComplexMatrix& m, double scale) {
    return drazin_inverse(m, tol, scale).d_inverse;
  };
  // Anchors (I - AA^D)B^D and A^D(I - BB^D) of the right and left series.
  const ComplexMatrix right_anchor = (eye - p) * bd;
  const ComplexMatrix left_anchor = ad * (eye - q);
  const double right_scale = spectral_norm(eye - p) * spectral_norm(bd);
  const double left_scale = sad * spectral_norm(eye - q);
  const auto right = [&] { return right_series(bd, ab, right_anchor, right_scale, terms, tol); };
  const auto left = [&] { return left_series(ad, ab, left_anchor, left_scale, terms, tol); };

  ComplexMatrix out;
  switch (formula) {
    case FormulaId::SUM_2_9: {
      const ComplexMatrix first = d(a * a * ad * (eye + ad * b), sa * sa * sad * (1.0 + sad * sb));
      const ComplexMatrix resolvent = a * (eye - p) * bd + eye;
      if (!is_invertible(resolvent, tol)) {
        throw SingularResolventError("SUM_2_9: A(I - AA^D)B^D + I is numerically singular");
      }
      const ComplexMatrix second = (eye - p) * bd * inverse(resolvent, tol);
      out = first + second;

      // The series for the second term is stated with (-AB)^{n-1} at n = 0.
      // Compare the candidate indexings against the resolvent term instead
      // of picking one.
      const ComplexMatrix with_n = right().sum;
      // L (I + sum_{n=1}^{dim-1} (-AB)^{n-1} (B^D)^{2n})
      //   = L + (sum_{m=0}^{dim-2} L (-AB)^m (B^D)^{2m}) (B^D)^2
      const ComplexMatrix shifted =
          right_anchor +
          right_series(bd, ab, right_anchor, right_scale, terms - 1, tol).sum * bd * bd;
      const double dev_n = deviation(with_n, second);
      const double dev_shift = deviation(shifted, second);
      const auto verdict = [&](double v) {
        return v <= tol.residual_rel ? "consistent" : "inconsistent";
      };
      r.notes.push_back("series indexing (-AB)^n (B^D)^{2n}, n = 0..dim-1: deviation " +
                        fmt(dev_n) + " from the resolvent term (" + verdict(dev_n) + ")");
      r.notes.push_back("series indexing I + sum_{n>=1} (-AB)^{n-1} (B^D)^{2n}: deviation " +
                        fmt(dev_shift) + " from the resolvent term (" + verdict(dev_shift) + ")");
      r.notes.emplace_back(
          "literal indexing (-AB)^{n-1} at n = 0 requires an inverse of AB and is not evaluated");
      break;
    }
    case FormulaId::COR_2_10_I: {
      const Series rs = right();
      const Series ls = left();
      out = d(p * sum * q, sp * (sa + sb) * sq) + rs.sum + ls.sum;
      r.notes.push_back(series_note("(I-AA^D)B^D(-AB)^n(B^D)^{2n}", rs, terms));
      r.notes.push_back(series_note("(A^D)^{2n}(-AB)^n A^D(I-BB^D)", ls, terms));
      break;
    }
    case FormulaId::COR_2_10_II: {
      const Series rs = right();
      out = d(p * sum, sp * (sa + sb)) + rs.sum;
      r.notes.push_back(series_note("(I-AA^D)B^D(-AB)^n(B^D)^{2n}", rs, terms));
      break;
    }
    case FormulaId::COR_2_10_III: {
      const Series ls = left();
      out = d(sum * q, (sa + sb) * sq) + ls.sum;
      r.notes.push_back(series_note("(A^D)^{2n}(-AB)^n A^D(I-BB^D)", ls, terms));
      break;
    }
    default:
      break;
  }

  const ComplexMatrix oracle = d(sum, sa + sb);
  r.checks.push_back(deviation_check("representation = (A+B)^D", out, oracle, tol));
  r.formula_output = out;
  r.oracle_output = oracle;
  r.deviation = deviation(out, oracle);
  finish(r);
  return r;
}

VerificationReport product_drazin(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const Tolerance& tol) {
  require_pair(a, b, "product_drazin");
  VerificationReport r;
  r.formula = "PRODUCT_3_3";
  r.hypotheses = both_weak(a, b, tol);
  if (!r.hypotheses_pass()) return not_met(r.formula, std::move(r.hypotheses));

  const ComplexMatrix ad = drazin_inverse(a, tol).d_inverse;
  const ComplexMatrix bd = drazin_inverse(b, tol).d_inverse;
  const ComplexMatrix ab = a * b;
  const ComplexMatrix x = bd * ad;
  const ComplexMatrix oracle =
      drazin_inverse(ab, tol, spectral_norm(a) * spectral_norm(b)).d_inverse;

  // Factor norms, so that products that vanish up to roundoff compare as zero.
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();
  const double nad = ad.frobenius_norm();
  const double nbd = bd.frobenius_norm();
  const double nab = na * nb;
  const double nx = nbd * nad;

  const ComplexMatrix a_nil = a - a * a * ad;  // A - A^2 A^D
  const ComplexMatrix b_nil = b - b * b * bd;
  const double a_nil_scale = na + na * na * nad;
  const double b_nil_scale = nb + nb * nb * nbd;

  r.checks.push_back(deviation_check("(AB)^D = B^D A^D", x, oracle, tol));
  r.checks.push_back(equation_check("AB X = X AB", ab * x, x * ab, nab * nx, tol));
  r.checks.push_back(equation_check("X AB X = X", x * ab * x, x, std::max(nx * nab * nx, nx), tol));
  r.checks.push_back(nilpotent_check("AB - AB X AB nilpotent", ab - ab * x * ab,
                                     nab + nab * nab * nx, tol));
  r.checks.push_back(nilpotent_check("(A - A^2A^D)B nilpotent", a_nil * b, a_nil_scale * nb, tol));
  r.checks.push_back(nilpotent_check("A^2A^D(B - B^2B^D) nilpotent", a * a * ad * b_nil,
                                     na * na * nad * b_nil_scale, tol));
  r.checks.push_back(zero_check("(A - A^2A^D)B A^2A^D(B - B^2B^D) = 0", a_nil * b * a * a * ad * b_nil,
                                a_nil_scale * nb * na * na * nad * b_nil_scale, tol));
  r.checks.push_back(zero_check("(A - A^2A^D)A^D ABA(B - B^2B^D) = 0",
                                a_nil * ad * a * b * a * b_nil,
                                a_nil_scale * nad * na * nb * na * b_nil_scale, tol));
  r.formula_output = x;
  r.oracle_output = oracle;
  r.deviation = deviation(x, oracle);
  finish(r);
  return r;
}

VerificationReport involutory_sum(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const Tolerance& tol) {
  require_pair(a, b, "involutory_sum");
  const Index n = a.rows();
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();
  const double root_n = std::sqrt(static_cast<double>(n));

  VerificationReport r;
  r.formula = "INVOLUTORY_4_2";
  r.hypotheses.push_back(equation_check("A^2 = I", a * a, eye, std::max(na * na, root_n), tol));
  r.hypotheses.push_back(equation_check("B^2 = I", b * b, eye, std::max(nb * nb, root_n), tol));
  r.hypotheses.push_back(equation_check("A - B = BAB - ABA", a - b, b * a * b - a * b * a,
                                        std::max(na + nb, na * nb * (na + nb)), tol));
  if (!r.hypotheses_pass()) return not_met(r.formula, std::move(r.hypotheses));

  const double sa = spectral_norm(a);
  const double sb = spectral_norm(b);
  const ComplexMatrix formula = drazin_inverse(eye + a * b, tol, 1.0 + sa * sb).d_inverse * a;
  const ComplexMatrix oracle = drazin_inverse(a + b, tol, sa + sb).d_inverse;
  r.checks.push_back(deviation_check("(A+B)^D = (I+AB)^D A", formula, oracle, tol));
  r.formula_output = formula;
  r.oracle_output = oracle;
  r.deviation = deviation(formula, oracle);
  finish(r);
  return r;
}

VerificationReport cline_transfer(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const Tolerance& tol, const std::optional<ComplexMatrix>& c) {
  require_pair(a, b, "cline_transfer");
  if (c) require_pair(a, *c, "cline_transfer");

  VerificationReport r;
  r.formula = "CLINE_4_1";
  const double prod_scale = spectral_norm(a) * spectral_norm(b);
  const ComplexMatrix abd = drazin_inverse(a * b, tol, prod_scale).d_inverse;
  const ComplexMatrix formula = b * abd * abd * a;
  const ComplexMatrix oracle = drazin_inverse(b * a, tol, prod_scale).d_inverse;
  r.checks.push_back(deviation_check("(BA)^D = B((AB)^D)^2 A", formula, oracle, tol));
  r.formula_output = formula;
  r.oracle_output = oracle;
  r.deviation = deviation(formula, oracle);

  if (is_invertible(a, tol)) {
    std::optional<ComplexMatrix> witness = c;
    if (!witness) witness = solve_witness(a, b, tol).witness;
    if (witness) {
      const double scale = a.frobenius_norm() * std::max(b.frobenius_norm(), witness->frobenius_norm());
      const bool holds = equation_check("AB = CA", a * b, *witness * a, scale, tol).pass &&
                         equation_check("BA = AC", b * a, a * *witness, scale, tol).pass;
      if (holds) {
        const DrazinResult sum_b = drazin_inverse(a + b, tol, sum_norm(a, b));
        const DrazinResult sum_c = drazin_inverse(a + *witness, tol, sum_norm(a, *witness));
        const ComplexMatrix a_inv = inverse(a, tol);
        r.checks.push_back(deviation_check("(A+B)^D = A^{-1}(A+C)^D A", sum_b.d_inverse,
                                           a_inv * sum_c.d_inverse * a, tol));
        const auto gap = static_cast<double>(sum_b.index > sum_c.index ? sum_b.index - sum_c.index
                                                                       : sum_c.index - sum_b.index);
        r.checks.push_back({"i(A+B) = i(A+C)", gap, gap == 0.0});
        r.notes.emplace_back("A invertible with witness C: A+B = A^{-1}(A+C)A");
      } else {
        r.notes.emplace_back("supplied C does not satisfy AB = CA, BA = AC; similarity check skipped");
      }
    }
  }
  finish(r);
  return r;
}

VerificationReport block_formula(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                 const ComplexMatrix& a3, const Tolerance& tol) {
  const ComplexMatrix assembled = assemble_lower_triangular(a1, a2, a3);
  const DrazinOperand op1 = DrazinOperand::of(a1, tol);
  const DrazinOperand op2 = DrazinOperand::of(a2, tol);
  const ComplexMatrix formula = block_triangular_drazin(op1, op2, a3, tol);
  const ComplexMatrix oracle = drazin_inverse(assembled, tol).d_inverse;

  VerificationReport r;
  r.formula = "BLOCK_2_2";
  r.checks.push_back(deviation_check("block formula = direct Drazin inverse", formula, oracle, tol));
  const Index p = a1.rows();
  const Index q = a2.rows();
  r.checks.push_back(deviation_check("diagonal block reproduces A1^D", oracle.block(0, 0, p, p),
                                     op1.drazin.d_inverse, tol));
  r.checks.push_back(deviation_check("diagonal block reproduces A2^D", oracle.block(p, p, q, q),
                                     op2.drazin.d_inverse, tol));
  r.formula_output = formula;
  r.oracle_output = oracle;
  r.deviation = deviation(formula, oracle);
  finish(r);
  return r;
}

VerificationReport check_hypotheses(HypothesisId which, std::span<const ComplexMatrix> inputs,
                                    const Tolerance& tol) {
  const auto arity = *expected_arity(to_string(which));
  if (inputs.size() != arity) {
    std::ostringstream msg;
    msg << to_string(which) << " takes " << arity << " matrices, got " << inputs.size();
    throw ArityError(msg.str());
  }
  for (std::size_t i = 1; i < inputs.size(); ++i) {
    require_pair(inputs[0], inputs[i], "check_hypotheses");
  }
  require_pair(inputs[0], inputs[0], "check_hypotheses");
  switch (which) {
    case HypothesisId::THM_2_7:
      return thm_2_7(inputs[0], inputs[1], tol);
    case HypothesisId::THM_2_11:
      return thm_2_11(inputs[0], inputs[1], inputs[2], tol);
    case HypothesisId::THM_2_12:
      return thm_2_12(inputs[0], inputs[1], tol);
    case HypothesisId::COR_3_5:
      return cor_3_5(inputs[0], inputs[1], tol);
    case HypothesisId::THM_4_4:
      return thm_4_4(inputs[0], inputs[1], inputs[2], tol);
    case HypothesisId::PROP_4_5:
      return prop_4_5(inputs[0], inputs[1], inputs[2], tol);
  }
  throw std::invalid_argument("check_hypotheses: unknown hypothesis id");
}

std::optional<std::size_t> expected_arity(std::string_view id) {
  if (auto f = parse_formula_id(id)) {
    return *f == FormulaId::BLOCK_2_2 ? 3 : 2;
  }
  if (auto h = parse_hypothesis_id(id)) {
    switch (*h) {
      case HypothesisId::THM_2_11:
      case HypothesisId::THM_4_4:
      case HypothesisId::PROP_4_5:
        return 3;
      default:
        return 2;
    }
  }
  return std::nullopt;
}

VerificationReport evaluate(std::string_view id, std::span<const ComplexMatrix> inputs,
                            const Tolerance& tol) {
  if (auto h = parse_hypothesis_id(id)) return check_hypotheses(*h, inputs, tol);
  const auto f = parse_formula_id(id);
  if (!f) throw std::invalid_argument("unknown formula or hypothesis id: " + std::string(id));

  const std::size_t arity = *expected_arity(id);
  const bool cline_with_witness = *f == FormulaId::CLINE_4_1 && inputs.size() == 3;
  if (inputs.size() != arity && !cline_with_witness) {
    std::ostringstream msg;
    msg << id << " takes " << arity << " matrices, got " << inputs.size();
    throw ArityError(msg.str());
  }
  switch (*f) {
    case FormulaId::SUM_NILPOTENT_RESOLVENT:
    case FormulaId::SUM_NILPOTENT_SERIES:
      return sum_drazin_nilpotent(inputs[0], inputs[1], tol, *f);
    case FormulaId::SUM_2_9:
    case FormulaId::COR_2_10_I:
    case FormulaId::COR_2_10_II:
    case FormulaId::COR_2_10_III:
      return sum_representation(*f, inputs[0], inputs[1], tol);
    case FormulaId::PRODUCT_3_3:
      return product_drazin(inputs[0], inputs[1], tol);
    case FormulaId::INVOLUTORY_4_2:
      return involutory_sum(inputs[0], inputs[1], tol);
    case FormulaId::CLINE_4_1:
      return cline_transfer(inputs[0], inputs[1], tol,
                            cline_with_witness ? std::optional<ComplexMatrix>(inputs[2]) : std::nullopt);
    case FormulaId::BLOCK_2_2:
      return block_formula(inputs[0], inputs[1], inputs[2], tol);
  }
  throw std::invalid_argument("evaluate: unhandled formula id");
}

}  // namespace drazin_lab
