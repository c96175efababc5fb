#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "drazin_lab/matrix.hpp"

namespace drazin_lab {

/// Seeded generator for reproducible matrix draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Doubles are taken from the top 53 bits and normals come from
/// Box-Muller, so draws do not depend on the standard library's
/// (implementation-defined) distributions. `stream(name)` derives an
/// independent child generator from (seed, name) through std::seed_seq, so
/// adding a draw to one named stream never shifts the values of another.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] Rng stream(std::string_view name) const;

  std::uint64_t next_u64() { return engine_(); }
  double uniform();  ///< [0, 1)
  double uniform(double lo, double hi);
  std::size_t index(std::size_t n);  ///< uniform in [0, n)
  bool coin(double p = 0.5);
  double normal();
  Complex complex_normal();  ///< E|z|^2 = 1
  Complex phase();           ///< uniform on the unit circle
  /// Random phase times a magnitude uniform in [lo, hi].
  Complex complex_in_annulus(double lo, double hi);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Complex Gaussian matrix.
ComplexMatrix gaussian_matrix(Rng& rng, Index rows, Index cols);
/// Haar-like unitary from the QR factorization of a Gaussian matrix.
ComplexMatrix random_unitary(Rng& rng, Index n);
/// Q1 diag(s) Q2 with s uniform in [1, 2]; 2-norm condition number <= 2.
ComplexMatrix well_conditioned(Rng& rng, Index n);

}  // namespace drazin_lab
