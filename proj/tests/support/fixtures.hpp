#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>

#include "drazin_lab/matrix.hpp"
#include "drazin_lab/report.hpp"
#include "drazin_lab/rng.hpp"

namespace fixtures {

using drazin_lab::Complex;
using drazin_lab::ComplexMatrix;

// Reference pairs with small-integer entries.
inline ComplexMatrix ex16_a() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }
inline ComplexMatrix ex16_b() { return ComplexMatrix::from_rows({{0, -1}, {0, 0}}); }
inline ComplexMatrix ex16_c() { return ComplexMatrix::from_rows({{0, 0}, {-1, 0}}); }

inline ComplexMatrix ex24_a() { return ComplexMatrix::from_rows({{0, 0}, {1, 0}}); }
inline ComplexMatrix ex24_b() { return ComplexMatrix::from_rows({{0, 1}, {0, 0}}); }

inline ComplexMatrix ex34_a(Complex x) {
  return ComplexMatrix::from_rows({{0, x, 0}, {x, 0, x}, {0, x, 0}});
}
inline ComplexMatrix ex34_b(Complex y) {
  return ComplexMatrix::from_rows({{y, 0, 0}, {0, -y, 0}, {0, 0, y}});
}
/// A^D: entries 1/(2x) in the cross pattern.
inline ComplexMatrix ex34_ad(Complex x) {
  const Complex h = 1.0 / (2.0 * x);
  return ComplexMatrix::from_rows({{0, h, 0}, {h, 0, h}, {0, h, 0}});
}
/// (AB)^D = B^D A^D: entries +-1/(2xy).
inline ComplexMatrix ex34_abd(Complex x, Complex y) {
  const Complex h = 1.0 / (2.0 * x * y);
  return ComplexMatrix::from_rows({{0, h, 0}, {-h, 0, -h}, {0, h, 0}});
}

inline ComplexMatrix ex43_t() {
  return ComplexMatrix::from_rows({{-1, 0, 0}, {0, 1, -10}, {0, 0, -1}});
}
inline ComplexMatrix ex43_s() {
  return ComplexMatrix::from_rows({{-1, 0, 2}, {0, -1, -10}, {0, 0, 1}});
}

/// Nonzero complex number with modulus in [0.5, 2].
inline Complex nonzero(drazin_lab::Rng& rng) { return rng.complex_in_annulus(0.5, 2.0); }

/// ||x - y||_F / max(1, ||y||_F).
inline double rel(const ComplexMatrix& x, const ComplexMatrix& y) {
  return drazin_lab::deviation(x, y);
}

}  // namespace fixtures
