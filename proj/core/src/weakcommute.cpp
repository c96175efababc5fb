#include "drazin_lab/weakcommute.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "drazin_lab/drazin.hpp"
#include "drazin_lab/errors.hpp"

namespace drazin_lab {
namespace {

constexpr std::array<std::pair<RelationFlag, std::string_view>, 6> kFlagNames{{
    {RelationFlag::commuting, "commuting"},
    {RelationFlag::a_weak, "a_weak"},
    {RelationFlag::b_weak, "b_weak"},
    {RelationFlag::ab_weak, "ab_weak"},
    {RelationFlag::squared_commuting, "squared_commuting"},
    {RelationFlag::chen_sheibani, "chen_sheibani"},
}};

void require_square_pair(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    std::ostringstream msg;
    msg << op << ": expected two square matrices of equal size, got " << a.rows() << "x" << a.cols()
        << " and " << b.rows() << "x" << b.cols();
    throw DimensionError(msg.str());
  }
}

ComplexMatrix witness_system(const ComplexMatrix& a) {
  const Index n = a.rows();
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  Eigen::MatrixXcd m(2 * n * n, n * n);
  m.topRows(n * n) = kron(a.transpose(), eye).eigen();  // vec(CA)
  m.bottomRows(n * n) = kron(eye, a).eigen();           // vec(AC)
  return ComplexMatrix(std::move(m));
}

// Recovers lambda with lambda * x = y from the first entry where both are
// clearly nonzero, then confirms it on the whole matrix.
bool proportional(const ComplexMatrix& x, const ComplexMatrix& y, double scale,
                  const Tolerance& tol) {
  const double zero_cut = tol.residual_rel * scale;
  const bool x_zero = x.frobenius_norm() <= zero_cut;
  const bool y_zero = y.frobenius_norm() <= zero_cut;
  if (x_zero || y_zero) return x_zero && y_zero;

  const double entry_cut = tol.residual_rel * std::max(x.frobenius_norm(), y.frobenius_norm());
  for (Index j = 0; j < x.cols(); ++j) {
    for (Index i = 0; i < x.rows(); ++i) {
      if (std::abs(x(i, j)) > entry_cut && std::abs(y(i, j)) > entry_cut) {
        const Complex lambda = y(i, j) / x(i, j);
        return distance(lambda * x, y) <= zero_cut;
      }
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(RelationFlag f) {
  for (const auto& [flag, name] : kFlagNames) {
    if (flag == f) return name;
  }
  return "?";
}

std::optional<RelationFlag> parse_relation_flag(std::string_view name) {
  for (const auto& [flag, n] : kFlagNames) {
    if (n == name) return flag;
  }
  return std::nullopt;
}

WitnessResult solve_witness(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  return solve_witness(a, b, tol,
                       static_cast<double>(a.rows()) * a.frobenius_norm() * b.frobenius_norm());
}

WitnessResult solve_witness(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol,
                            double scale) {
  require_square_pair(a, b, "solve_witness");
  const Index n = a.rows();
  const ComplexMatrix ab = a * b;
  const ComplexMatrix ba = b * a;

  const ComplexMatrix system = witness_system(a);
  Eigen::MatrixXcd rhs(2 * n * n, 1);
  rhs.topRows(n * n) = vec(ab).eigen();
  rhs.bottomRows(n * n) = vec(ba).eigen();

  const auto ls = solve_linear_least_squares(system, ComplexMatrix(std::move(rhs)), tol);

  WitnessResult out;
  out.candidate = unvec(ls.solution, n, n);
  out.residual = distance(ab, out.candidate * a) + distance(ba, a * out.candidate);
  out.scale = scale;
  out.threshold = tol.residual_rel * out.scale;
  // Homogeneous solutions are {H : HA = 0, AH = 0}, of dimension (n - rank A)^2.
  const auto nullity = static_cast<std::size_t>(n) - rank(a, tol);
  out.solution_space_dim = nullity * nullity;
  if (out.residual <= out.threshold) out.witness = out.candidate;
  return out;
}

std::vector<ComplexMatrix> witness_homogeneous_basis(const ComplexMatrix& a, const Tolerance& tol) {
  if (!a.is_square()) throw NonSquareError("witness_homogeneous_basis: expected a square matrix");
  // H = v u^* with Av = 0 and A^* u = 0 spans {H : HA = 0, AH = 0}; the
  // products of orthonormal null vectors are Frobenius-orthonormal.
  const Index n = a.rows();
  const auto r = static_cast<Index>(rank(a, tol));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.eigen(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  std::vector<ComplexMatrix> basis;
  for (Index i = r; i < n; ++i) {
    for (Index j = r; j < n; ++j) {
      basis.emplace_back(Eigen::MatrixXcd(svd.matrixV().col(i) * svd.matrixU().col(j).adjoint()));
    }
  }
  return basis;
}

RelationClass classify_pair(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  require_square_pair(a, b, "classify_pair");
  const double n = static_cast<double>(a.rows());
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();
  RelationClass out;

  const double comm = scaled_residual(distance(a * b, b * a), n * na * nb);
  out.residuals[RelationFlag::commuting] = comm;
  if (comm <= tol.residual_rel) out.flags.insert(RelationFlag::commuting);

  const auto wa = solve_witness(a, b, tol);
  out.residuals[RelationFlag::a_weak] = wa.normalized_residual();
  if (wa.exists()) {
    out.flags.insert(RelationFlag::a_weak);
    out.a_witness = wa.witness;
  }
  const auto wb = solve_witness(b, a, tol);
  out.residuals[RelationFlag::b_weak] = wb.normalized_residual();
  if (wb.exists()) {
    out.flags.insert(RelationFlag::b_weak);
    out.b_witness = wb.witness;
  }
  out.residuals[RelationFlag::ab_weak] =
      std::max(out.residuals[RelationFlag::a_weak], out.residuals[RelationFlag::b_weak]);
  if (wa.exists() && wb.exists()) out.flags.insert(RelationFlag::ab_weak);

  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a2b = a2 * b;
  const ComplexMatrix ba2 = b * a2;
  const ComplexMatrix aba = a * b * a;
  const double cubic_scale = n * na * na * nb;
  const double sq = scaled_residual(distance(a2b, ba2), cubic_scale);
  out.residuals[RelationFlag::squared_commuting] = sq;
  if (sq <= tol.residual_rel) out.flags.insert(RelationFlag::squared_commuting);

  if (proportional(a2b, aba, cubic_scale, tol) && proportional(ba2, aba, cubic_scale, tol)) {
    out.flags.insert(RelationFlag::chen_sheibani);
  }
  return out;
}

VerificationReport commutation_identities(const ComplexMatrix& a, const ComplexMatrix& b,
                                          const ComplexMatrix& c, const Tolerance& tol) {
  require_square_pair(a, b, "commutation_identities");
  require_square_pair(a, c, "commutation_identities");
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();
  const double nc = c.frobenius_norm();

  const Check left = equation_check("AB = CA", a * b, c * a, na * std::max(nb, nc), tol);
  const Check right = equation_check("BA = AC", b * a, a * c, na * std::max(nb, nc), tol);
  if (!left.pass || !right.pass) {
    std::ostringstream msg;
    msg << "commutation_identities: precondition violated:";
    if (!left.pass) msg << " AB = CA (residual " << left.residual << ")";
    if (!right.pass) msg << " BA = AC (residual " << right.residual << ")";
    throw PreconditionError(msg.str());
  }

  const DrazinResult dr = drazin_inverse(a, tol);
  const ComplexMatrix& d = dr.d_inverse;
  const ComplexMatrix p = a * d;
  const double np = p.frobenius_norm();
  const double nd = d.frobenius_norm();

  VerificationReport report;
  report.formula = "COMMUTATION_IDENTITIES";
  report.hypotheses = {left, right};
  report.checks.push_back(equation_check("AA^D B = B AA^D", p * b, b * p, np * nb, tol));
  report.checks.push_back(equation_check("AA^D C = C AA^D", p * c, c * p, np * nc, tol));
  report.checks.push_back(equation_check("A^D B = C A^D", d * b, c * d, nd * std::max(nb, nc), tol));
  report.checks.push_back(equation_check("A^D C = B A^D", d * c, b * d, nd * std::max(nb, nc), tol));
  report.deviation = worst_residual(report.checks);
  report.verdict = report.checks_pass() ? Verdict::pass : Verdict::fail;
  return report;
}

}  // namespace drazin_lab
