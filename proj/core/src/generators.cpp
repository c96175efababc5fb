#include "drazin_lab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "drazin_lab/errors.hpp"
#include "drazin_lab/formulas.hpp"

namespace drazin_lab {
namespace {

constexpr int kMaxAttempts = 100;

using Outcomes = std::map<std::string, Verdict>;

// What a construction guarantees; expected verdicts are read off from it.
struct Facts {
  bool a_weak = false;
  bool b_weak = false;
  bool b_nilpotent = false;
  bool b_invertible = false;
  bool c_invertible = false;
  bool bc_commute = false;
  bool involutory = false;
  bool thm_2_12 = false;
};

Verdict holds(bool cond) { return cond ? Verdict::pass : Verdict::hypotheses_not_met; }

Outcomes outcomes_from(const Facts& f) {
  const bool ab = f.a_weak && f.b_weak;
  Outcomes o;
  o["SUM_NILPOTENT_RESOLVENT"] = holds(ab && f.b_nilpotent);
  o["SUM_NILPOTENT_SERIES"] = holds(ab && f.b_nilpotent);
  for (const char* id : {"SUM_2_9", "COR_2_10_I", "COR_2_10_II", "COR_2_10_III", "PRODUCT_3_3",
                         "THM_2_7", "COR_3_5"}) {
    o[id] = holds(ab);
  }
  o["INVOLUTORY_4_2"] = holds(f.involutory);
  o["CLINE_4_1"] = Verdict::pass;
  o["BLOCK_2_2"] = Verdict::pass;
  o["THM_2_11"] = holds(f.b_nilpotent && f.b_weak && f.a_weak);
  o["THM_2_12"] = holds(f.thm_2_12);
  o["THM_4_4"] = holds(f.a_weak && f.b_invertible && f.c_invertible);
  o["PROP_4_5"] = holds(f.a_weak && f.b_invertible && f.c_invertible && f.bc_commute);
  return o;
}

using Flags = std::map<RelationFlag, bool>;

Flags weak_flags(bool a_weak, bool b_weak) {
  // a_weak forces A^2 B = B A^2, so squared_commuting follows.
  Flags f{{RelationFlag::a_weak, a_weak},
          {RelationFlag::b_weak, b_weak},
          {RelationFlag::ab_weak, a_weak && b_weak}};
  if (a_weak) f[RelationFlag::squared_commuting] = true;
  return f;
}

double param(const FamilySpec& spec, std::size_t i, double fallback) {
  return i < spec.params.size() ? spec.params[i] : fallback;
}

int int_param(const FamilySpec& spec, std::size_t i, int fallback, int lo, int hi) {
  const double v = param(spec, i, fallback);
  if (v != std::floor(v) || v < lo || v > hi) {
    std::ostringstream msg;
    msg << to_string(spec.family) << ": parameter " << i << " must be an integer in [" << lo
        << ", " << hi << "], got " << v;
    throw GenerationError(msg.str());
  }
  return static_cast<int>(v);
}

ComplexMatrix conjugate(const ComplexMatrix& p, const ComplexMatrix& p_inv, const ComplexMatrix& m) {
  return p * m * p_inv;
}

ComplexMatrix block_diag(const ComplexMatrix& x, const ComplexMatrix& y) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(x.rows() + y.rows(), x.cols() + y.cols());
  if (x.rows() > 0) out.topLeftCorner(x.rows(), x.cols()) = x.eigen();
  if (y.rows() > 0) out.bottomRightCorner(y.rows(), y.cols()) = y.eigen();
  return ComplexMatrix(std::move(out));
}

[[noreturn]] void give_up(std::string_view what) {
  throw GenerationError(std::string(what) + ": no acceptable draw after " +
                        std::to_string(kMaxAttempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Conjugation construction.
//
// In an eigenbasis A = diag(l1, -l1, ..., lm, -lm [, mu]). Any C that is
// block diagonal over the 2x2 eigenspaces of A^2 commutes with A^2, and
// B = A C A^{-1} then satisfies AB = CA and BA = AC. The spectrum of A^2 is
// kept separated so that these are exactly the eigenspaces of A^2.

enum class BlockKind { generic, traceless, nilpotent };

struct ConjugationCore {
  ComplexMatrix a;
  ComplexMatrix b;
  ComplexMatrix c;
  bool b_weak = false;
  bool b_nilpotent = false;
  bool b_invertible = false;
};

// 2x2 block M of C for eigenvalue pair (l, -l).
Eigen::Matrix2cd draw_block(Rng& rng, BlockKind kind, Complex l) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Eigen::Matrix2cd m;
    switch (kind) {
      case BlockKind::nilpotent:
        m << 0.0, rng.complex_in_annulus(0.75, 1.25), 0.0, 0.0;
        if (rng.coin()) m.transposeInPlace();
        return m;
      case BlockKind::traceless: {
        const Complex d = rng.complex_normal();
        m << d, rng.complex_normal(), rng.complex_normal(), -d;
        break;
      }
      case BlockKind::generic:
        m << rng.complex_normal(), rng.complex_normal(), rng.complex_normal(),
            rng.complex_normal();
        break;
    }
    // B-block = [[m11, -m12], [-m21, m22]]; A+B block = diag(l, -l) + that.
    const Complex det_m = m.determinant();
    const Complex det_sum = (l + m(0, 0)) * (-l + m(1, 1)) - m(0, 1) * m(1, 0);
    const Complex skew = m(0, 0) - m(1, 1);
    const bool ok = std::abs(det_m) >= 0.25 && std::abs(det_sum) >= 0.25 &&
                    std::abs(m(0, 1) * skew) >= 0.25 && std::abs(m(1, 0) * skew) >= 0.25 &&
                    (kind != BlockKind::generic ||
                     std::abs(m(0, 1) * (m(0, 0) + m(1, 1))) >= 0.25);
    if (ok) return m;
  }
  give_up("conjugation block");
}

// kinds.size() == n / 2; `scalar_c` is the odd trailing entry of C.
ConjugationCore conjugation_core(Rng& rng, Index n, const std::vector<BlockKind>& kinds,
                                 Complex scalar_c) {
  const Index pairs = n / 2;
  const Index count = pairs + n % 2;
  // Squares of the eigenvalues spread around an annulus: arguments in
  // separate sectors, moduli in [0.64, 1.5625].
  std::vector<Complex> squares(static_cast<std::size_t>(count));
  const double offset = rng.uniform(0.0, 2.0 * std::numbers::pi);
  for (Index i = 0; i < count; ++i) {
    const double arg = offset + 2.0 * std::numbers::pi * (static_cast<double>(i) + rng.uniform(0.0, 0.5)) /
                                    static_cast<double>(count);
    squares[static_cast<std::size_t>(i)] = std::polar(rng.uniform(0.64, 1.5625), arg);
  }

  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd cb = Eigen::MatrixXcd::Zero(n, n);
  for (Index i = 0; i < pairs; ++i) {
    const Complex l = std::sqrt(squares[static_cast<std::size_t>(i)]);
    d(2 * i, 2 * i) = l;
    d(2 * i + 1, 2 * i + 1) = -l;
    cb.block<2, 2>(2 * i, 2 * i) = draw_block(rng, kinds[static_cast<std::size_t>(i)], l);
  }
  if (n % 2 == 1) {
    d(n - 1, n - 1) = std::sqrt(squares.back());
    cb(n - 1, n - 1) = scalar_c;
  }
  // B in the eigenbasis: d_i c_ij / d_j.
  Eigen::MatrixXcd bb = cb;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) bb(i, j) = d(i, i) * cb(i, j) / d(j, j);
  }

  const ComplexMatrix p = well_conditioned(rng, n);
  const ComplexMatrix p_inv = inverse(p, Tolerance{});
  ConjugationCore out;
  out.a = conjugate(p, p_inv, ComplexMatrix(d));
  out.b = conjugate(p, p_inv, ComplexMatrix(bb));
  out.c = conjugate(p, p_inv, ComplexMatrix(cb));

  const bool any_generic = std::count(kinds.begin(), kinds.end(), BlockKind::generic) > 0;
  const bool all_nil = std::all_of(kinds.begin(), kinds.end(),
                                   [](BlockKind k) { return k == BlockKind::nilpotent; });
  const bool any_nil = std::any_of(kinds.begin(), kinds.end(),
                                   [](BlockKind k) { return k == BlockKind::nilpotent; });
  out.b_weak = !any_generic;
  out.b_nilpotent = all_nil && (n % 2 == 0 || scalar_c == Complex(0.0));
  out.b_invertible = !any_nil && (n % 2 == 0 || scalar_c != Complex(0.0));
  return out;
}

// ---------------------------------------------------------------------------

GeneratedInstance paper_instance(const FamilySpec& spec) {
  GeneratedInstance inst;
  inst.spec = spec;
  switch (spec.family) {
    case Family::PAPER_EX_1_6:
    case Family::PAPER_EX_2_6: {
      inst.a = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
      inst.b = ComplexMatrix::from_rows({{0, -1}, {0, 0}});
      if (spec.family == Family::PAPER_EX_1_6) {
        inst.c = ComplexMatrix::from_rows({{0, 0}, {-1, 0}});
      }
      inst.expected_class = weak_flags(true, false);
      inst.expected_class[RelationFlag::commuting] = false;
      inst.expected_class[RelationFlag::chen_sheibani] = false;
      inst.expected_outcomes = outcomes_from({.a_weak = true, .b_nilpotent = true});
      break;
    }
    case Family::PAPER_EX_2_4:
      inst.a = ComplexMatrix::from_rows({{0, 0}, {1, 0}});
      inst.b = ComplexMatrix::from_rows({{0, 1}, {0, 0}});
      inst.expected_class = weak_flags(false, false);
      inst.expected_class[RelationFlag::commuting] = false;
      inst.expected_class[RelationFlag::squared_commuting] = true;
      inst.expected_class[RelationFlag::chen_sheibani] = false;
      inst.expected_outcomes = outcomes_from({.b_nilpotent = true});
      break;
    case Family::PAPER_EX_3_4: {
      Complex x{1.0, 0.0};
      Complex y{1.0, 0.0};
      if (spec.params.size() == 2) {
        x = spec.params[0];
        y = spec.params[1];
      } else if (spec.params.size() == 4) {
        x = {spec.params[0], spec.params[1]};
        y = {spec.params[2], spec.params[3]};
      } else if (!spec.params.empty()) {
        throw GenerationError("PAPER_EX_3_4: expected 0, 2 or 4 parameters");
      }
      if (x == Complex(0.0) || y == Complex(0.0)) {
        throw GenerationError("PAPER_EX_3_4: x and y must be nonzero");
      }
      inst.a = ComplexMatrix::from_rows({{0, x, 0}, {x, 0, x}, {0, x, 0}});
      inst.b = ComplexMatrix::from_rows({{y, 0, 0}, {0, -y, 0}, {0, 0, y}});
      inst.c = -inst.b;
      inst.expected_class = weak_flags(true, true);
      inst.expected_class[RelationFlag::commuting] = false;
      inst.expected_class[RelationFlag::chen_sheibani] = true;
      inst.expected_outcomes = outcomes_from({.a_weak = true,
                                              .b_weak = true,
                                              .b_invertible = true,
                                              .c_invertible = true,
                                              .bc_commute = true});
      break;
    }
    case Family::PAPER_EX_4_3_BLOCK:
      inst.a = ComplexMatrix::from_rows({{-1, 0, 0}, {0, 1, -10}, {0, 0, -1}});
      inst.b = ComplexMatrix::from_rows({{-1, 0, 2}, {0, -1, -10}, {0, 0, 1}});
      inst.c = inst.a * inst.b * inst.a;  // A^{-1} = A
      inst.expected_class = weak_flags(true, true);
      inst.expected_class[RelationFlag::commuting] = false;
      inst.expected_outcomes = outcomes_from({.a_weak = true,
                                              .b_weak = true,
                                              .b_invertible = true,
                                              .c_invertible = true,
                                              .involutory = true});
      break;
    default:
      break;
  }
  return inst;
}

GeneratedInstance conjugation_instance(const FamilySpec& spec) {
  const int mode = int_param(spec, 0, 0, 0, 2);
  const auto n = static_cast<Index>(spec.dim);
  Rng rng = Rng(spec.seed).stream("CONJUGATION");
  const BlockKind kind = mode == 0 ? BlockKind::generic
                         : mode == 1 ? BlockKind::traceless
                                     : BlockKind::nilpotent;
  const Complex scalar_c = mode == 2 ? Complex(0.0) : rng.complex_in_annulus(0.5, 1.5);
  const auto core = conjugation_core(rng, n, std::vector<BlockKind>(static_cast<std::size_t>(n / 2), kind), scalar_c);

  GeneratedInstance inst;
  inst.spec = spec;
  inst.a = core.a;
  inst.b = core.b;
  inst.c = core.c;
  inst.expected_class = weak_flags(true, core.b_weak);
  if (n >= 2) inst.expected_class[RelationFlag::commuting] = false;
  if (mode == 2) inst.expected_class[RelationFlag::chen_sheibani] = true;
  inst.expected_outcomes = outcomes_from({.a_weak = true,
                                          .b_weak = core.b_weak,
                                          .b_nilpotent = core.b_nilpotent,
                                          .b_invertible = core.b_invertible,
                                          .c_invertible = core.b_invertible,
                                          .bc_commute = n == 1});
  return inst;
}

GeneratedInstance block_split_instance(const FamilySpec& spec) {
  const int core_mode = int_param(spec, 0, 0, 0, 4);
  const int nil_mode = int_param(spec, 1, 0, 0, 1);
  const int similarity = int_param(spec, 2, 1, 0, 1);
  const auto n = static_cast<Index>(spec.dim);
  Rng rng = Rng(spec.seed).stream("BLOCK_SPLIT");
  const auto r = static_cast<Index>(1 + rng.index(static_cast<std::size_t>(n - 1)));
  const Index s = n - r;

  // Core block.
  ComplexMatrix a1;
  ComplexMatrix b1;
  ComplexMatrix c1;
  bool b1_nilpotent = false;
  bool b1_invertible = false;
  if (core_mode == 4) {
    const auto base = conjugation_core(rng, r, std::vector<BlockKind>(static_cast<std::size_t>(r / 2), BlockKind::nilpotent),
                                       Complex(0.0));
    a1 = base.a;
    // B1 = alpha A1 + mu I; keep B1 and A1 + B1 away from singular.
    const auto spectrum = a1.eigen().eigenvalues().eval();
    int attempt = 0;
    for (; attempt < kMaxAttempts; ++attempt) {
      const Complex alpha = rng.complex_in_annulus(0.5, 1.5);
      const Complex mu = rng.complex_in_annulus(0.5, 1.5);
      bool ok = true;
      for (Index i = 0; i < spectrum.size(); ++i) {
        ok = ok && std::abs(alpha * spectrum(i) + mu) >= 0.25 &&
             std::abs((1.0 + alpha) * spectrum(i) + mu) >= 0.25;
      }
      if (ok) {
        b1 = alpha * a1 + mu * ComplexMatrix::identity(r);
        break;
      }
    }
    if (attempt == kMaxAttempts) give_up("BLOCK_SPLIT core polynomial");
    c1 = b1;
    b1_invertible = true;
  } else if (core_mode == 3) {
    a1 = conjugation_core(rng, r, std::vector<BlockKind>(static_cast<std::size_t>(r / 2), BlockKind::nilpotent), Complex(0.0)).a;
    b1 = ComplexMatrix(r, r);
    c1 = b1;
    b1_nilpotent = true;
  } else {
    std::vector<BlockKind> kinds(static_cast<std::size_t>(r / 2));
    Complex scalar_c{0.0};
    for (auto& k : kinds) {
      k = core_mode == 0   ? BlockKind::nilpotent
          : core_mode == 1 ? BlockKind::traceless
                           : (rng.coin() ? BlockKind::nilpotent : BlockKind::traceless);
    }
    if (core_mode == 1 || (core_mode == 2 && rng.coin())) {
      scalar_c = rng.complex_in_annulus(0.5, 1.5);
    }
    const auto core = conjugation_core(rng, r, kinds, scalar_c);
    a1 = core.a;
    b1 = core.b;
    c1 = core.c;
    b1_nilpotent = core.b_nilpotent;
    b1_invertible = core.b_invertible;
  }

  // Nilpotent block: B2 a polynomial in A2, so the pair commutes and B2
  // serves as its own witness.
  const ComplexMatrix a2 = random_nilpotent(rng, s);
  const ComplexMatrix a2sq = a2 * a2;
  const Complex beta1 = rng.complex_in_annulus(0.25, 0.5);
  const Complex beta2 = rng.uniform(0.0, 0.5) * rng.phase();
  ComplexMatrix b2 = beta1 * a2 + beta2 * a2sq;
  if (nil_mode == 1) b2 += rng.complex_in_annulus(0.8, 1.25) * ComplexMatrix::identity(s);

  ComplexMatrix a = block_diag(a1, a2);
  ComplexMatrix b = block_diag(b1, b2);
  ComplexMatrix c = block_diag(c1, b2);
  if (similarity == 1) {
    const ComplexMatrix p = well_conditioned(rng, n);
    const ComplexMatrix p_inv = inverse(p, Tolerance{});
    a = conjugate(p, p_inv, a);
    b = conjugate(p, p_inv, b);
    c = conjugate(p, p_inv, c);
  }

  GeneratedInstance inst;
  inst.spec = spec;
  inst.a = std::move(a);
  inst.b = std::move(b);
  inst.c = std::move(c);
  inst.expected_class = weak_flags(true, true);
  const bool commuting = core_mode >= 3 || r == 1;
  if (commuting) inst.expected_class[RelationFlag::commuting] = true;
  if (!commuting && core_mode != 2) inst.expected_class[RelationFlag::commuting] = false;
  const bool b_nilpotent = b1_nilpotent && nil_mode == 0;
  // A 1x1 nilpotent core block is zero.
  const bool b1_zero = core_mode == 3 || (r == 1 && b1_nilpotent);
  const bool b_invertible = b1_invertible && nil_mode == 1;
  inst.expected_outcomes = outcomes_from({.a_weak = true,
                                          .b_weak = true,
                                          .b_nilpotent = b_nilpotent,
                                          .b_invertible = b_invertible,
                                          .c_invertible = b_invertible,
                                          .bc_commute = core_mode >= 3 || r == 1,
                                          .thm_2_12 = b1_zero});
  std::ostringstream note;
  note << "core block " << r << "x" << r << ", nilpotent block " << s << "x" << s;
  inst.notes.push_back(note.str());
  return inst;
}

GeneratedInstance involutory_instance(const FamilySpec& spec) {
  FamilySpec base_spec{Family::PAPER_EX_4_3_BLOCK, 3, spec.seed, {}};
  GeneratedInstance inst = paper_instance(base_spec);
  Rng rng = Rng(spec.seed).stream("INVOLUTORY_SIM");
  const ComplexMatrix p = well_conditioned(rng, 3);
  const ComplexMatrix p_inv = inverse(p, Tolerance{});
  inst.spec = spec;
  inst.a = conjugate(p, p_inv, inst.a);
  inst.b = conjugate(p, p_inv, inst.b);
  inst.c = conjugate(p, p_inv, *inst.c);
  return inst;
}

GeneratedInstance generate_resolved(const FamilySpec& spec);

// Orthonormal basis of the null space of the 2n^2 x 2n^2 map
// (X, Y) -> (X F - G Y, F' X - Y G') described by `system`.
Eigen::MatrixXcd null_basis(const Eigen::MatrixXcd& system, const Tolerance& tol) {
  // null(M) is the orthogonal complement of range(M^*); a column-pivoted QR
  // of M^* reveals both.
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(system.cols(), system.rows());
  qr.setThreshold(tol.rank_rel * static_cast<double>(std::max(system.rows(), system.cols())));
  qr.compute(system.adjoint());
  const Eigen::MatrixXcd q = qr.householderQ();
  return q.rightCols(system.cols() - qr.rank());
}

GeneratedInstance negative_control_instance(const FamilySpec& spec) {
  const int base_index = int_param(spec, 0, static_cast<int>(Family::PAPER_EX_3_4), 0,
                                   static_cast<int>(std::size(kAllFamilies)) - 1);
  const int target = int_param(spec, 1, 0, 0, 1);
  const Family base_family = kAllFamilies[base_index];
  if (base_family == Family::NEGATIVE_CONTROL) {
    throw GenerationError("NEGATIVE_CONTROL: base family cannot be NEGATIVE_CONTROL");
  }
  FamilySpec base_spec{base_family, spec.dim, spec.seed,
                       std::vector<double>(spec.params.begin() + std::min<std::size_t>(2, spec.params.size()),
                                           spec.params.end())};
  const GeneratedInstance base = generate_resolved(base_spec);
  const auto ab = base.expected_class.find(RelationFlag::ab_weak);
  if (ab == base.expected_class.end() || !ab->second) {
    throw GenerationError("NEGATIVE_CONTROL: base family " + std::string(to_string(base_family)) +
                          " does not produce {A,B}-weakly commutative pairs with these parameters");
  }

  const Tolerance tol;
  const Index n = base.a.rows();
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  // target 0: perturb A inside {A' : (A', B) stays b-weak}, unknowns (A', C').
  // target 1: perturb B inside {B' : (A, B') stays a-weak}, unknowns (B', C).
  const ComplexMatrix& fixed = target == 0 ? base.b : base.a;
  const ComplexMatrix& moved = target == 0 ? base.a : base.b;
  const ComplexMatrix left = kron(fixed.transpose(), eye);   // vec(X F)
  const ComplexMatrix right = kron(eye, fixed);              // vec(F X)
  const Index nn = n * n;
  Eigen::MatrixXcd system(2 * nn, 2 * nn);
  if (target == 0) {
    // A'B - BC' = 0, BA' - C'B = 0
    system << left.eigen(), -right.eigen(), right.eigen(), -left.eigen();
  } else {
    // AB' - CA = 0, B'A - AC = 0
    system << right.eigen(), -left.eigen(), left.eigen(), -right.eigen();
  }
  const Eigen::MatrixXcd basis = null_basis(system, tol);

  Rng rng = Rng(spec.seed).stream("NEGATIVE_CONTROL");
  const double size = 0.1 * moved.frobenius_norm();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const ComplexMatrix u = gaussian_matrix(rng, n, 1);
    const ComplexMatrix v = gaussian_matrix(rng, n, 1);
    Eigen::VectorXcd bump = Eigen::VectorXcd::Zero(2 * nn);
    bump.head(nn) = vec(u * v.adjoint()).eigen();
    const Eigen::VectorXcd projected = basis * (basis.adjoint() * bump);
    const double norm = projected.head(nn).norm();
    if (norm < 1e-8) continue;
    const Eigen::VectorXcd step = projected * (size / norm);
    const ComplexMatrix e = unvec(ComplexMatrix(Eigen::MatrixXcd(step.head(nn))), n, n);
    const ComplexMatrix h = unvec(ComplexMatrix(Eigen::MatrixXcd(step.tail(nn))), n, n);

    GeneratedInstance inst;
    inst.spec = spec;
    inst.a = target == 0 ? base.a + e : base.a;
    inst.b = target == 0 ? base.b : base.b + e;
    const auto a_side = solve_witness(inst.a, inst.b, tol);
    const auto b_side = solve_witness(inst.b, inst.a, tol);
    // Require the broken relation to fail by a wide margin.
    const auto& broken = target == 0 ? a_side : b_side;
    const auto& kept = target == 0 ? b_side : a_side;
    if (!kept.exists() || broken.normalized_residual() < 1e3 * tol.residual_rel) continue;

    if (target == 1) {
      inst.c = base.c ? *base.c + h : a_side.witness;
    }
    inst.broken_hypothesis = target == 0 ? "a_weak" : "b_weak";
    inst.expected_class = {{RelationFlag::a_weak, target == 1},
                           {RelationFlag::b_weak, target == 0},
                           {RelationFlag::ab_weak, false}};
    for (const char* id : {"SUM_NILPOTENT_RESOLVENT", "SUM_NILPOTENT_SERIES", "SUM_2_9",
                           "COR_2_10_I", "COR_2_10_II", "COR_2_10_III", "PRODUCT_3_3", "THM_2_7"}) {
      inst.expected_outcomes[id] = Verdict::hypotheses_not_met;
    }
    inst.expected_outcomes[target == 0 ? "COR_3_5" : "THM_2_11"] = Verdict::hypotheses_not_met;
    if (target == 0) inst.expected_outcomes["THM_2_12"] = Verdict::hypotheses_not_met;
    inst.notes.emplace_back(
        "the perturbed pair is not conditioned; unconditional identities are not asserted");
    inst.notes.push_back("perturbed " + std::string(target == 0 ? "A" : "B") + " of a " +
                         std::string(to_string(base_family)) + " instance; " +
                         *inst.broken_hypothesis + " now fails");
    return inst;
  }
  give_up("NEGATIVE_CONTROL perturbation");
}

std::size_t default_dim(Family f) {
  if (auto d = fixed_dim(f)) return *d;
  return 4;
}

GeneratedInstance generate_resolved(const FamilySpec& in) {
  FamilySpec spec = in;
  if (spec.family == Family::NEGATIVE_CONTROL) {
    const int base_index = int_param(spec, 0, static_cast<int>(Family::PAPER_EX_3_4), 0,
                                     static_cast<int>(std::size(kAllFamilies)) - 1);
    if (spec.dim == 0) spec.dim = default_dim(kAllFamilies[base_index]);
  } else if (spec.dim == 0) {
    spec.dim = default_dim(spec.family);
  }
  if (auto d = fixed_dim(spec.family); d && spec.dim != *d) {
    throw DimensionError(std::string(to_string(spec.family)) + " requires dim " +
                         std::to_string(*d) + ", got " + std::to_string(spec.dim));
  }
  const std::size_t max_dim = 64;
  if (spec.dim > max_dim) {
    throw DimensionError(std::string(to_string(spec.family)) + ": dim " +
                         std::to_string(spec.dim) + " exceeds " + std::to_string(max_dim));
  }
  switch (spec.family) {
    case Family::PAPER_EX_1_6:
    case Family::PAPER_EX_2_4:
    case Family::PAPER_EX_2_6:
    case Family::PAPER_EX_3_4:
    case Family::PAPER_EX_4_3_BLOCK:
      return paper_instance(spec);
    case Family::CONJUGATION:
      return conjugation_instance(spec);
    case Family::BLOCK_SPLIT:
      if (spec.dim < 2) throw DimensionError("BLOCK_SPLIT requires dim >= 2");
      return block_split_instance(spec);
    case Family::INVOLUTORY_SIM:
      return involutory_instance(spec);
    case Family::NEGATIVE_CONTROL:
      return negative_control_instance(spec);
  }
  throw GenerationError("unknown family");
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::PAPER_EX_1_6: return "PAPER_EX_1_6";
    case Family::PAPER_EX_2_4: return "PAPER_EX_2_4";
    case Family::PAPER_EX_2_6: return "PAPER_EX_2_6";
    case Family::PAPER_EX_3_4: return "PAPER_EX_3_4";
    case Family::PAPER_EX_4_3_BLOCK: return "PAPER_EX_4_3_BLOCK";
    case Family::CONJUGATION: return "CONJUGATION";
    case Family::BLOCK_SPLIT: return "BLOCK_SPLIT";
    case Family::INVOLUTORY_SIM: return "INVOLUTORY_SIM";
    case Family::NEGATIVE_CONTROL: return "NEGATIVE_CONTROL";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::optional<std::size_t> fixed_dim(Family f) {
  switch (f) {
    case Family::PAPER_EX_1_6:
    case Family::PAPER_EX_2_4:
    case Family::PAPER_EX_2_6:
      return 2;
    case Family::PAPER_EX_3_4:
    case Family::PAPER_EX_4_3_BLOCK:
    case Family::INVOLUTORY_SIM:
      return 3;
    default:
      return std::nullopt;
  }
}

GeneratedInstance generate(const FamilySpec& spec) {
  if (spec.dim == 0 && spec.family != Family::NEGATIVE_CONTROL && !fixed_dim(spec.family)) {
    FamilySpec resolved = spec;
    resolved.dim = default_dim(spec.family);
    return generate_resolved(resolved);
  }
  return generate_resolved(spec);
}

std::vector<ComplexMatrix> outcome_inputs(const GeneratedInstance& inst, std::string_view id,
                                          const Tolerance& tol) {
  const auto arity = expected_arity(id);
  if (!arity) throw std::invalid_argument("unknown formula or hypothesis id: " + std::string(id));
  if (*arity == 2) return {inst.a, inst.b};
  if (id == "BLOCK_2_2") return {inst.a, inst.b, inst.c ? *inst.c : inst.a * inst.b};
  if (inst.c) return {inst.a, inst.b, *inst.c};
  const auto w = solve_witness(inst.a, inst.b, tol);
  return {inst.a, inst.b, w.witness ? *w.witness : ComplexMatrix(inst.a.rows(), inst.a.cols())};
}

std::vector<OutcomeCheck> check_outcomes(const GeneratedInstance& inst, const Tolerance& tol) {
  std::vector<OutcomeCheck> out;
  for (const auto& [id, expected] : inst.expected_outcomes) {
    OutcomeCheck oc{id, expected, std::nullopt, 0.0, {}};
    try {
      const auto rep = evaluate(id, outcome_inputs(inst, id, tol), tol);
      oc.got = rep.verdict;
      oc.deviation = rep.deviation;
      std::vector<std::string> failing = rep.failing_hypotheses();
      for (const auto& c : rep.checks) {
        if (!c.pass) failing.push_back(c.name);
      }
      for (std::size_t i = 0; i < failing.size(); ++i) {
        oc.detail += (i ? "; " : "") + failing[i];
      }
    } catch (const std::exception& e) {
      oc.detail = e.what();
    }
    out.push_back(std::move(oc));
  }
  return out;
}

VerificationReport self_check(const GeneratedInstance& inst, const Tolerance& tol) {
  VerificationReport r;
  r.formula = "SELF_CHECK";
  r.seed = inst.spec.seed;
  r.family = std::string(to_string(inst.spec.family));

  const RelationClass cls = classify_pair(inst.a, inst.b, tol);
  for (const auto& [flag, expected] : inst.expected_class) {
    const bool got = cls.has(flag);
    const auto res = cls.residuals.find(flag);
    r.checks.push_back({"class " + std::string(to_string(flag)) + ": expected " +
                            (expected ? "true" : "false") + ", got " + (got ? "true" : "false"),
                        res == cls.residuals.end() ? 0.0 : res->second, got == expected});
  }
  for (const auto& oc : check_outcomes(inst, tol)) {
    std::string name = "outcome " + oc.id + ": expected " + std::string(to_string(oc.expected)) +
                       ", got " + (oc.got ? std::string(to_string(*oc.got)) : "error");
    if (!oc.ok() && !oc.detail.empty()) name += " [" + oc.detail + "]";
    r.checks.push_back({std::move(name), oc.deviation, oc.ok()});
  }
  r.deviation = 0.0;
  r.verdict = r.checks_pass() ? Verdict::pass : Verdict::fail;
  return r;
}

ComplexMatrix random_nilpotent(Rng& rng, Index n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Index i = 1; i < n; ++i) {
    if (rng.uniform() >= 1.0 / 3.0) m(i, i - 1) = rng.complex_in_annulus(0.75, 1.25);
  }
  return ComplexMatrix(std::move(m));
}

ComplexMatrix random_drazin_matrix(Rng& rng, Index n, DrazinKind kind) {
  Index core = n;
  if (kind == DrazinKind::nilpotent) core = 0;
  if (kind == DrazinKind::mixed) core = n < 2 ? n : static_cast<Index>(1 + rng.index(static_cast<std::size_t>(n - 1)));
  ComplexMatrix core_block;
  if (core > 0) {
    // Q1 diag(s) Q2 with |s| in [0.5, 2] and random phases.
    const ComplexMatrix q1 = random_unitary(rng, core);
    const ComplexMatrix q2 = random_unitary(rng, core);
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(core, core);
    for (Index i = 0; i < core; ++i) d(i, i) = rng.uniform(0.5, 2.0);
    core_block = q1 * ComplexMatrix(std::move(d)) * q2;
  }
  const ComplexMatrix nil = random_nilpotent(rng, n - core);
  const ComplexMatrix p = well_conditioned(rng, n);
  return conjugate(p, inverse(p, Tolerance{}), block_diag(core_block, nil));
}

}  // namespace drazin_lab
