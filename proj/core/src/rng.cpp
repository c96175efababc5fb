#include "drazin_lab/rng.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/QR>

namespace drazin_lab {

Rng::Rng(std::uint64_t seed) : seed_(seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  engine_.seed(seq);
}

Rng Rng::stream(std::string_view name) const {
  // FNV-1a over the stream name, mixed with the parent seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  std::vector<std::uint32_t> out(2);
  seq.generate(out.begin(), out.end());
  return Rng((static_cast<std::uint64_t>(out[1]) << 32) | out[0]);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::size_t Rng::index(std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

bool Rng::coin(double p) { return uniform() < p; }

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Complex Rng::phase() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

Complex Rng::complex_in_annulus(double lo, double hi) { return uniform(lo, hi) * phase(); }

ComplexMatrix gaussian_matrix(Rng& rng, Index rows, Index cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  }
  return ComplexMatrix(std::move(m));
}

ComplexMatrix random_unitary(Rng& rng, Index n) {
  const ComplexMatrix g = gaussian_matrix(rng, n, n);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g.eigen());
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return ComplexMatrix(std::move(q));
}

ComplexMatrix well_conditioned(Rng& rng, Index n) {
  const ComplexMatrix q1 = random_unitary(rng, n);
  const ComplexMatrix q2 = random_unitary(rng, n);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = rng.uniform(1.0, 2.0);
  return q1 * ComplexMatrix(std::move(d)) * q2;
}

}  // namespace drazin_lab
