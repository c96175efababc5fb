#include "drazin_lab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

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

double cutoff(const ComplexMatrix& a, const Tolerance& tol, double reference) {
  return tol.rank_rel * reference * static_cast<double>(std::max(a.rows(), a.cols()));
}

}  // namespace

Tolerance Tolerance::make(double rank_rel, double residual_rel) {
  Tolerance t{rank_rel, residual_rel};
  t.validate();
  return t;
}

void Tolerance::validate() const {
  const auto ok = [](double v) { return std::isfinite(v) && v > 0.0 && v < 1.0; };
  if (!ok(rank_rel) || !ok(residual_rel)) {
    throw std::invalid_argument("Tolerance: rank_rel and residual_rel must lie in (0, 1)");
  }
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b; }

std::vector<double> singular_values(const ComplexMatrix& a) {
  if (a.empty()) return {};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.eigen());
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double spectral_norm(const ComplexMatrix& a) {
  const auto s = singular_values(a);
  return s.empty() ? 0.0 : s.front();
}

std::size_t rank(const ComplexMatrix& a, const Tolerance& tol) {
  const auto s = singular_values(a);
  if (s.empty()) return 0;
  const double cut = cutoff(a, tol, s.front());
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double v) { return v > cut; }));
}

std::size_t rank_against(const ComplexMatrix& a, const Tolerance& tol, double reference) {
  const auto s = singular_values(a);
  const double cut = cutoff(a, tol, reference);
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double v) { return v > cut; }));
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& a, const Tolerance& tol) {
  if (a.empty()) return ComplexMatrix(a.cols(), a.rows());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.eigen(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cut = cutoff(a, tol, s(0));
  Eigen::VectorXd inv_s = Eigen::VectorXd::Zero(s.size());
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut) inv_s(i) = 1.0 / s(i);
  }
  return ComplexMatrix(
      Eigen::MatrixXcd(svd.matrixV() * inv_s.cast<Complex>().asDiagonal() * svd.matrixU().adjoint()));
}

LeastSquaresSolution solve_linear_least_squares(const ComplexMatrix& m, const ComplexMatrix& rhs,
                                                const Tolerance& tol) {
  if (rhs.cols() != 1 || rhs.rows() != m.rows()) {
    std::ostringstream msg;
    msg << "solve_linear_least_squares: rhs must be " << m.rows() << "x1, got " << rhs.rows() << "x"
        << rhs.cols();
    throw DimensionError(msg.str());
  }
  LeastSquaresSolution out;
  if (m.frobenius_norm() == 0.0) {
    out.solution = ComplexMatrix(m.cols(), 1);
    out.residual_norm = rhs.frobenius_norm();
    return out;
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod;
  cod.setThreshold(tol.rank_rel * static_cast<double>(std::max(m.rows(), m.cols())));
  cod.compute(m.eigen());
  Eigen::MatrixXcd x = cod.solve(rhs.eigen());
  out.residual_norm = (m.eigen() * x - rhs.eigen()).norm();
  out.solution = ComplexMatrix(std::move(x));
  out.rank = static_cast<std::size_t>(cod.rank());
  return out;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, std::size_t k) {
  require_square(a, "matrix_power");
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd base = a.eigen();
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return ComplexMatrix(std::move(result));
}

bool is_invertible(const ComplexMatrix& a, const Tolerance& tol) {
  return a.is_square() && rank(a, tol) == static_cast<std::size_t>(a.rows());
}

ComplexMatrix inverse(const ComplexMatrix& a, const Tolerance& tol) {
  require_square(a, "inverse");
  if (a.empty()) return a;
  if (!is_invertible(a, tol)) {
    throw SingularMatrixError("inverse: matrix is numerically singular");
  }
  return ComplexMatrix(Eigen::MatrixXcd(a.eigen().fullPivLu().inverse()));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.eigen();
    }
  }
  return ComplexMatrix(std::move(out));
}

ComplexMatrix vec(const ComplexMatrix& a) {
  Eigen::MatrixXcd v = a.eigen().reshaped(a.rows() * a.cols(), 1);
  return ComplexMatrix(std::move(v));
}

ComplexMatrix unvec(const ComplexMatrix& v, Index rows, Index cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) {
    throw DimensionError("unvec: length does not match target shape");
  }
  Eigen::MatrixXcd m = v.eigen().reshaped(rows, cols);
  return ComplexMatrix(std::move(m));
}

NilpotencyCheck nilpotency(const ComplexMatrix& m, const Tolerance& tol, double scale) {
  require_square(m, "nilpotency");
  NilpotencyCheck out;
  const auto n = static_cast<std::size_t>(m.rows());
  if (n == 0) {
    out.nilpotent = true;
    return out;
  }
  ComplexMatrix power = m;
  double ref = scale;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      power = power * m;
      ref *= scale;
    }
    if (rank_against(power, tol, ref) == 0) {
      out.nilpotent = true;
      out.index = k;
      break;
    }
  }
  const ComplexMatrix top = out.nilpotent && out.index == n ? power : matrix_power(m, n);
  out.residual = scaled_residual(spectral_norm(top), std::pow(scale, static_cast<double>(n)));
  return out;
}

NilpotencyCheck nilpotency(const ComplexMatrix& m, const Tolerance& tol) {
  return nilpotency(m, tol, m.frobenius_norm());
}

double scaled_residual(double raw, double scale) { return scale > 0.0 ? raw / scale : raw; }

}  // namespace drazin_lab
