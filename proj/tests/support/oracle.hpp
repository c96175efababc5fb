#pragma once

// Test-side oracles, written without reusing any library algorithm:
//  * exact arithmetic over Q(i) with boost::multiprecision rationals
//    (row reduction, rank, Moore-Penrose through a full-rank factorization,
//    Drazin inverse as A^k (A^{2k+1})^+ A^k, linear-system consistency);
//  * a plain double-precision triple-loop product and a JacobiSVD
//    pseudoinverse used for the floating-point Drazin oracle.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "drazin_lab/matrix.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

struct QC {
  Rational re;
  Rational im;

  QC() = default;
  QC(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  QC(long long r) : re(r), im(0) {}

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] QC conj() const { return {re, -im}; }
  friend bool operator==(const QC& a, const QC& b) { return a.re == b.re && a.im == b.im; }
};

QC operator+(const QC& a, const QC& b);
QC operator-(const QC& a, const QC& b);
QC operator-(const QC& a);
QC operator*(const QC& a, const QC& b);
QC operator/(const QC& a, const QC& b);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  /// Exact conversion of every double (binary fractions are rationals).
  static QMatrix from(const drazin_lab::ComplexMatrix& m);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  QC& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  const QC& operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

  [[nodiscard]] QMatrix adjoint() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] drazin_lab::ComplexMatrix to_double() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QC> v_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);

struct Rref {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const QMatrix& a);
std::size_t rank(const QMatrix& a);
QMatrix power(const QMatrix& a, std::size_t k);
/// Gauss-Jordan inverse; the matrix must be invertible.
QMatrix inverse(const QMatrix& a);
/// A = F G with F the pivot columns of A and G the nonzero rows of its RREF;
/// A^+ = G^* (G G^*)^{-1} (F^* F)^{-1} F^*.
QMatrix pseudo_inverse(const QMatrix& a);
/// Least k >= 0 with rank(A^k) = rank(A^{k+1}).
std::size_t index(const QMatrix& a);
QMatrix drazin(const QMatrix& a);
/// Whether M x = rhs has an exact solution.
bool consistent(const QMatrix& m, const QMatrix& rhs);
/// Whether C exists with AB = CA and BA = AC, decided on the stacked
/// 2n^2 x n^2 system over Q(i).
bool witness_exists(const QMatrix& a, const QMatrix& b);

// Floating-point oracles.
drazin_lab::ComplexMatrix naive_matmul(const drazin_lab::ComplexMatrix& a,
                                       const drazin_lab::ComplexMatrix& b);
/// SVD pseudoinverse; singular values at or below `cutoff` are dropped.
drazin_lab::ComplexMatrix svd_pinv(const drazin_lab::ComplexMatrix& a, double cutoff);
/// Rank stabilization of A^j with singular values counted above
/// rel * s^j * n, where s is `scale` when positive and sigma_max(A) otherwise.
std::size_t svd_index(const drazin_lab::ComplexMatrix& a, double rel = 1e-9, double scale = 0.0);
/// A^k (A^{2k+1})^+ A^k with the supplied k; singular values of A^{2k+1}
/// below cutoff * s^{2k+1} are dropped, with s as in svd_index.
drazin_lab::ComplexMatrix pinv_drazin(const drazin_lab::ComplexMatrix& a, std::size_t k,
                                      double cutoff = 1e-11, double scale = 0.0);
/// pinv_drazin at the svd_index of A, both against the same reference.
drazin_lab::ComplexMatrix float_drazin(const drazin_lab::ComplexMatrix& a, double scale = 0.0);

}  // namespace oracle
