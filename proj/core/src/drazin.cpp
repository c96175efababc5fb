#include "drazin_lab/drazin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "drazin_lab/errors.hpp"

namespace drazin_lab {
namespace {

void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) {
    std::ostringstream msg;
    msg << op << ": expected a square matrix, got " << a.rows() << "x" << a.cols();
    throw NonSquareError(msg.str());
  }
}

ComplexMatrix sum_or_zero(const ComplexMatrix& acc, Index rows, Index cols) {
  return acc.empty() && rows * cols > 0 ? ComplexMatrix(rows, cols) : acc;
}

}  // namespace

std::size_t drazin_index(const ComplexMatrix& a, const Tolerance& tol, double scale) {
  require_square(a, "drazin_index");
  const auto n = static_cast<std::size_t>(a.rows());
  const double sigma = spectral_norm(a);
  ComplexMatrix power = ComplexMatrix::identity(a.rows());
  std::size_t previous = n;
  double ref = std::max(sigma, scale) / (sigma > 0.0 ? sigma : 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    power = power * a;
    ref *= sigma > 0.0 ? sigma : 1.0;
    const std::size_t next = rank_against(power, tol, ref);
    if (next == previous) return k;
    previous = next;
  }
  return n;
}

CoreNilpotentSplit core_nilpotent_split(const ComplexMatrix& a, const Tolerance& tol,
                                        double scale) {
  require_square(a, "core_nilpotent_split");
  const Index n = a.rows();
  CoreNilpotentSplit out;
  out.index = drazin_index(a, tol, scale);
  if (out.index == 0) {
    out.basis_change = ComplexMatrix::identity(n);
    out.basis_change_inverse = ComplexMatrix::identity(n);
    out.core_block = a;
    out.nilpotent_block = ComplexMatrix(0, 0);
    return out;
  }

  const ComplexMatrix ak = matrix_power(a, out.index);
  const double sigma = spectral_norm(a);
  const double ref = std::pow(sigma, static_cast<double>(out.index - 1)) * std::max(sigma, scale);
  const auto r = static_cast<Index>(rank_against(ak, tol, ref));

  // Range of A^k from the leading left singular vectors, null space of A^k
  // from the trailing right singular vectors.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ak.eigen(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXcd s(n, n);
  s.leftCols(r) = svd.matrixU().leftCols(r);
  s.rightCols(n - r) = svd.matrixV().rightCols(n - r);

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(s);
  Eigen::MatrixXcd s_inv = lu.inverse();
  Eigen::MatrixXcd t = s_inv * a.eigen() * s;

  out.basis_change = ComplexMatrix(std::move(s));
  out.basis_change_inverse = ComplexMatrix(std::move(s_inv));
  out.core_block = ComplexMatrix(Eigen::MatrixXcd(t.topLeftCorner(r, r)));
  out.nilpotent_block = ComplexMatrix(Eigen::MatrixXcd(t.bottomRightCorner(n - r, n - r)));
  return out;
}

DrazinResult drazin_inverse(const ComplexMatrix& a, const Tolerance& tol, double scale) {
  const CoreNilpotentSplit split = core_nilpotent_split(a, tol, scale);
  const Index n = a.rows();
  const auto r = static_cast<Index>(split.core_dim());

  DrazinResult out;
  out.index = split.index;
  out.core_dim = split.core_dim();

  if (r == 0) {
    out.d_inverse = ComplexMatrix(n, n);
  } else {
    const auto s = singular_values(split.core_block);
    out.core_condition = s.back() > 0.0 ? s.front() / s.back() : INFINITY;
    if (!(out.core_condition <= 1.0 / tol.rank_rel)) {
      std::ostringstream msg;
      msg << "ill-conditioned core block (condition estimate " << out.core_condition << ")";
      out.warnings.push_back(msg.str());
    }
    const Eigen::MatrixXcd core_inv = split.core_block.eigen().fullPivLu().inverse();
    Eigen::MatrixXcd d = split.basis_change.eigen().leftCols(r) * core_inv *
                         split.basis_change_inverse.eigen().topRows(r);
    out.d_inverse = ComplexMatrix(std::move(d));
  }
  out.projector = ComplexMatrix::identity(n) - a * out.d_inverse;
  return out;
}

SplitBlocks split_blocks(const CoreNilpotentSplit& split, const ComplexMatrix& m) {
  if (m.rows() != split.basis_change.rows() || !m.is_square()) {
    throw DimensionError("split_blocks: matrix does not match the split dimension");
  }
  const Index n = m.rows();
  const auto r = static_cast<Index>(split.core_dim());
  const ComplexMatrix t = split.basis_change_inverse * m * split.basis_change;
  return {t.block(0, 0, r, r), t.block(0, r, r, n - r), t.block(r, 0, n - r, r),
          t.block(r, r, n - r, n - r)};
}

DrazinOperand DrazinOperand::of(ComplexMatrix m, const Tolerance& tol) {
  DrazinResult d = drazin_inverse(m, tol);
  return {std::move(m), std::move(d)};
}

ComplexMatrix assemble_lower_triangular(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                        const ComplexMatrix& a3) {
  require_square(a1, "assemble_lower_triangular");
  require_square(a2, "assemble_lower_triangular");
  if (a3.rows() != a2.rows() || a3.cols() != a1.cols()) {
    std::ostringstream msg;
    msg << "assemble_lower_triangular: lower-left block must be " << a2.rows() << "x" << a1.cols()
        << ", got " << a3.rows() << "x" << a3.cols();
    throw DimensionError(msg.str());
  }
  const Index p = a1.rows();
  const Index q = a2.rows();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p + q, p + q);
  m.topLeftCorner(p, p) = a1.eigen();
  m.bottomLeftCorner(q, p) = a3.eigen();
  m.bottomRightCorner(q, q) = a2.eigen();
  return ComplexMatrix(std::move(m));
}

ComplexMatrix block_triangular_drazin(const DrazinOperand& a1, const DrazinOperand& a2,
                                      const ComplexMatrix& a3, const Tolerance& /*tol*/) {
  const ComplexMatrix assembled = assemble_lower_triangular(a1.matrix, a2.matrix, a3);
  const Index p = a1.matrix.rows();
  const Index q = a2.matrix.rows();
  const ComplexMatrix& d1 = a1.drazin.d_inverse;
  const ComplexMatrix& d2 = a2.drazin.d_inverse;

  ComplexMatrix lower(q, p);
  {
    // sum_{n < i(A1)} (A2^D)^{n+2} A3 A1^n A1^pi
    ComplexMatrix left = d2 * d2;
    ComplexMatrix right = a1.drazin.projector;
    for (std::size_t k = 0; k < a1.drazin.index; ++k) {
      lower += left * a3 * right;
      left = left * d2;
      right = a1.matrix * right;
    }
  }
  {
    // sum_{n < i(A2)} A2^pi A2^n A3 (A1^D)^{n+2}
    ComplexMatrix left = a2.drazin.projector;
    ComplexMatrix right = d1 * d1;
    for (std::size_t k = 0; k < a2.drazin.index; ++k) {
      lower += left * a3 * right;
      left = left * a2.matrix;
      right = right * d1;
    }
  }
  lower -= d2 * a3 * d1;

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(assembled.rows(), assembled.cols());
  out.topLeftCorner(p, p) = d1.eigen();
  out.bottomLeftCorner(q, p) = sum_or_zero(lower, q, p).eigen();
  out.bottomRightCorner(q, q) = d2.eigen();
  return ComplexMatrix(std::move(out));
}

ComplexMatrix block_triangular_drazin(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                      const ComplexMatrix& a3, const Tolerance& tol) {
  assemble_lower_triangular(a1, a2, a3);  // shape validation
  return block_triangular_drazin(DrazinOperand::of(a1, tol), DrazinOperand::of(a2, tol), a3, tol);
}

VerificationReport verify_drazin_axioms(const ComplexMatrix& a, const ComplexMatrix& x,
                                        std::size_t k, const Tolerance& tol, double scale) {
  require_square(a, "verify_drazin_axioms");
  if (x.rows() != a.rows() || x.cols() != a.cols()) {
    throw DimensionError("verify_drazin_axioms: candidate inverse has the wrong shape");
  }
  const double na = std::max(a.frobenius_norm(), scale);
  const double nx = x.frobenius_norm();
  const std::size_t m = k == 0 ? 1 : k;

  VerificationReport report;
  report.formula = "DRAZIN_AXIOMS";
  report.checks.push_back(equation_check("commutation AX = XA", a * x, x * a, na * nx, tol));
  report.checks.push_back(
      equation_check("outer inverse XAX = X", x * a * x, x, std::max(nx * na * nx, nx), tol));
  const ComplexMatrix remainder = a - a * a * x;
  const double rem_scale = std::pow(na + na * na * nx, static_cast<double>(m));
  report.checks.push_back(zero_check("nilpotent remainder (A - A^2 X)^k = 0",
                                     matrix_power(remainder, m), rem_scale, tol));
  report.deviation = worst_residual(report.checks);
  report.verdict = report.checks_pass() ? Verdict::pass : Verdict::fail;
  return report;
}

}  // namespace drazin_lab
