#include "drazin_lab/matrix.hpp"

#include <ostream>
#include <sstream>
#include <string>

#include "drazin_lab/errors.hpp"

namespace drazin_lab {
namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
        << b.cols();
    throw DimensionError(msg.str());
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(Index rows, Index cols) : m_(Eigen::MatrixXcd::Zero(rows, cols)) {}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd values) : m_(std::move(values)) {
  if (!all_finite()) {
    throw std::invalid_argument("ComplexMatrix: entries must be finite");
  }
}

ComplexMatrix ComplexMatrix::zero(Index rows, Index cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::identity(Index n) {
  return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n));
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto r = static_cast<Index>(rows.size());
  const auto c = r == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
  Eigen::MatrixXcd m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) {
      throw DimensionError("from_rows: ragged rows");
    }
    Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(Eigen::MatrixXcd(m_.adjoint())); }

ComplexMatrix ComplexMatrix::transpose() const {
  return ComplexMatrix(Eigen::MatrixXcd(m_.transpose()));
}

double ComplexMatrix::frobenius_norm() const { return m_.norm(); }

bool ComplexMatrix::all_finite() const {
  for (Index j = 0; j < m_.cols(); ++j) {
    for (Index i = 0; i < m_.rows(); ++i) {
      const auto& v = m_(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  }
  return true;
}

ComplexMatrix ComplexMatrix::block(Index row, Index col, Index rows, Index cols) const {
  if (row < 0 || col < 0 || rows < 0 || cols < 0 || row + rows > m_.rows() ||
      col + cols > m_.cols()) {
    throw DimensionError("block: range outside matrix");
  }
  return ComplexMatrix(Eigen::MatrixXcd(m_.block(row, col, rows, cols)));
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  m_ += other.m_;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  m_ -= other.m_;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  m_ *= scalar;
  return *this;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.m_ == b.m_;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r = a;
  r += b;
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r = a;
  r -= b;
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a) { return ComplexMatrix(Eigen::MatrixXcd(-a.eigen())); }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "matmul: " << a.rows() << "x" << a.cols() << " times " << b.rows() << "x" << b.cols();
    throw DimensionError(msg.str());
  }
  return ComplexMatrix(Eigen::MatrixXcd(a.eigen() * b.eigen()));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix r = a;
  r *= s;
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, Complex s) { return s * a; }

double distance(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).frobenius_norm(); }

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m) {
  os << "[";
  for (Index i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      const auto v = m(i, j);
      os << v.real();
      if (v.imag() != 0.0) os << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    }
    os << "]";
    if (i + 1 < m.rows()) os << "\n";
  }
  return os << "]";
}

}  // namespace drazin_lab
