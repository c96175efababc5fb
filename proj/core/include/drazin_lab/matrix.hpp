#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>

#include <Eigen/Dense>

namespace drazin_lab {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Dense complex matrix. Thin value wrapper over Eigen::MatrixXcd that
/// enforces finite entries at construction and checks shapes on arithmetic.
///
/// Zero-sized matrices are allowed so that empty core or nilpotent blocks
/// can be represented; everything read from JSON is at least 1x1.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(Index rows, Index cols);
  explicit ComplexMatrix(Eigen::MatrixXcd values);

  static ComplexMatrix zero(Index rows, Index cols);
  static ComplexMatrix identity(Index n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  [[nodiscard]] Index rows() const noexcept { return m_.rows(); }
  [[nodiscard]] Index cols() const noexcept { return m_.cols(); }
  [[nodiscard]] bool is_square() const noexcept { return m_.rows() == m_.cols(); }
  [[nodiscard]] bool empty() const noexcept { return m_.size() == 0; }

  [[nodiscard]] Complex operator()(Index i, Index j) const { return m_(i, j); }
  Complex& operator()(Index i, Index j) { return m_(i, j); }

  [[nodiscard]] const Eigen::MatrixXcd& eigen() const noexcept { return m_; }

  [[nodiscard]] ComplexMatrix adjoint() const;
  [[nodiscard]] ComplexMatrix transpose() const;
  [[nodiscard]] double frobenius_norm() const;
  [[nodiscard]] bool all_finite() const;

  [[nodiscard]] ComplexMatrix block(Index row, Index col, Index rows, Index cols) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  Eigen::MatrixXcd m_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, Complex s);

/// Frobenius norm of a - b.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m);

}  // namespace drazin_lab
