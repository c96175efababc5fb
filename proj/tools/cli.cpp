#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "drazin_lab/drazin.hpp"
#include "drazin_lab/errors.hpp"
#include "drazin_lab/formulas.hpp"
#include "drazin_lab/generators.hpp"
#include "drazin_lab/json_io.hpp"
#include "drazin_lab/suite.hpp"
#include "drazin_lab/weakcommute.hpp"

namespace drazin_lab::cli {
namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Thrown for bad flag values that CLI11 cannot validate itself.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename T>
std::pair<T, T> parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  const std::string lo = dots == std::string::npos ? text : text.substr(0, dots);
  const std::string hi = dots == std::string::npos ? text : text.substr(dots + 2);
  auto num = [&](const std::string& s) {
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError(std::string(flag) + ": expected A..B with non-negative integers, got \"" +
                       text + "\"");
    }
    return v;
  };
  const T a = num(lo);
  const T b = num(hi);
  if (b < a) throw UsageError(std::string(flag) + ": empty range \"" + text + "\"");
  return {a, b};
}

std::vector<double> parse_params(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--params: \"" + item + "\" is not a number");
    }
  }
  return out;
}

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("DRAZIN_LAB_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::uint64_t v = 0;
  const std::string s(raw);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("DRAZIN_LAB_SEED: expected a non-negative integer, got \"" + s + "\"");
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  double rank_tol = 1e-10;
  double resid_tol = 1e-9;
  std::string output;

  std::vector<std::string> files;
  std::string formula;
  std::string family;
  std::string params;
  std::size_t dim = 0;
  std::optional<std::uint64_t> seed;
  std::string spec_file;
  bool check = false;
  std::string seeds;
  std::string dims = "2..8";
  unsigned threads = 0;
};

void emit(const Json& j, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << dump(j);
    return;
  }
  std::ofstream f(opt.output, std::ios::binary);
  if (!f) throw UsageError("-o: cannot write " + opt.output);
  f << dump(j);
}

std::vector<ComplexMatrix> load_all(const std::vector<std::string>& files) {
  std::vector<ComplexMatrix> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(load_matrix(f));
  return out;
}

int cmd_drazin(const Options& opt, const Tolerance& tol, std::ostream& out) {
  const auto m = load_all(opt.files);
  const DrazinResult r = drazin_inverse(m[0], tol);
  const VerificationReport axioms = verify_drazin_axioms(m[0], r.d_inverse, r.index, tol);
  Json j = to_json(r);
  j["axioms"] = to_json(axioms);
  emit(j, opt, out);
  return axioms.verdict == Verdict::pass ? kPass : kFail;
}

int cmd_witness(const Options& opt, const Tolerance& tol, std::ostream& out) {
  const auto m = load_all(opt.files);
  const WitnessResult w = solve_witness(m[0], m[1], tol);
  emit(to_json(w), opt, out);
  return w.exists() ? kPass : kFail;
}

int cmd_classify(const Options& opt, const Tolerance& tol, std::ostream& out) {
  const auto m = load_all(opt.files);
  emit(to_json(classify_pair(m[0], m[1], tol)), opt, out);
  return kPass;
}

int cmd_verify(const Options& opt, const Tolerance& tol, std::ostream& out) {
  const auto arity = expected_arity(opt.formula);
  if (!arity) throw UsageError("--formula: unknown formula or hypothesis id \"" + opt.formula + "\"");
  const auto m = load_all(opt.files);
  const VerificationReport r = evaluate(opt.formula, m, tol);
  emit(to_json(r), opt, out);
  return r.verdict == Verdict::pass ? kPass : kFail;
}

int cmd_generate(const Options& opt, const Tolerance& tol, std::ostream& out) {
  FamilySpec spec;
  if (!opt.spec_file.empty()) {
    spec = parse_family_spec(read_file(opt.spec_file), opt.spec_file);
  } else {
    if (opt.family.empty()) throw UsageError("generate: --family or --spec is required");
    const auto fam = parse_family(opt.family);
    if (!fam) throw UsageError("--family: unknown family \"" + opt.family + "\"");
    spec.family = *fam;
    spec.dim = opt.dim;
    spec.seed = opt.seed ? *opt.seed : env_seed().value_or(0);
    spec.params = parse_params(opt.params);
  }
  const GeneratedInstance inst = generate(spec);
  Json j = to_json(inst);
  int code = kPass;
  if (opt.check) {
    const VerificationReport r = self_check(inst, tol);
    j["self_check"] = to_json(r);
    code = r.verdict == Verdict::pass ? kPass : kFail;
  }
  emit(j, opt, out);
  return code;
}

int cmd_suite(const Options& opt, const Tolerance& tol, std::ostream& out) {
  SuiteConfig cfg;
  if (!opt.seeds.empty()) {
    std::tie(cfg.seed_first, cfg.seed_last) = parse_range<std::uint64_t>(opt.seeds, "--seeds");
  } else {
    const std::uint64_t base = env_seed().value_or(0);
    cfg.seed_first = base;
    cfg.seed_last = base + 99;
  }
  std::tie(cfg.dim_first, cfg.dim_last) = parse_range<std::size_t>(opt.dims, "--dims");
  if (cfg.dim_first == 0) throw UsageError("--dims: dimensions must be positive");
  cfg.tol = tol;
  cfg.threads = opt.threads;
  const SuiteResult r = run_suite(cfg);
  emit(to_json(r), opt, out);
  return r.passed() == r.cases.size() ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Drazin inverse toolkit: compute, classify and verify weakly commutative pairs",
               "drazin-lab"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--rank-tol", opt.rank_tol, "relative singular-value cutoff")
      ->capture_default_str();
  app.add_option("--resid-tol", opt.resid_tol, "relative residual acceptance threshold")
      ->capture_default_str();
  app.add_option("-o,--output", opt.output, "write JSON here instead of stdout");

  auto* drazin = app.add_subcommand("drazin", "Drazin inverse, index and spectral idempotent");
  drazin->add_option("matrix", opt.files, "matrix JSON file")->required()->expected(1);

  auto* witness = app.add_subcommand("witness", "solve AB = CA, BA = AC for C");
  witness->add_option("matrices", opt.files, "A.json B.json")->required()->expected(2);

  auto* classify = app.add_subcommand("classify", "relation flags of a pair");
  classify->add_option("matrices", opt.files, "A.json B.json")->required()->expected(2);

  auto* verify = app.add_subcommand("verify", "check a formula or hypothesis set against the oracle");
  verify->add_option("--formula", opt.formula, "FormulaId or HypothesisId")->required();
  verify->add_option("matrices", opt.files, "two or three matrix files")->required()->expected(2, 3);

  auto* gen = app.add_subcommand("generate", "build a seeded instance of a family");
  gen->add_option("--family", opt.family, "family name");
  gen->add_option("--params", opt.params, "comma separated family parameters");
  gen->add_option("--dim", opt.dim, "dimension (0 = family default)");
  gen->add_option("--seed", opt.seed, "seed (default: DRAZIN_LAB_SEED or 0)");
  gen->add_option("--spec", opt.spec_file, "FamilySpec JSON file");
  gen->add_flag("--check", opt.check, "embed a self-check report; exit 1 if it fails");

  auto* suite = app.add_subcommand("suite", "batch self-check over seeds and dimensions");
  suite->add_option("--seeds", opt.seeds, "A..B (default: DRAZIN_LAB_SEED..+99)");
  suite->add_option("--dims", opt.dims, "A..B")->capture_default_str();
  suite->add_option("--threads", opt.threads, "worker count (0 = hardware)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "drazin-lab: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Tolerance tol = Tolerance::make(opt.rank_tol, opt.resid_tol);
    if (*drazin) return cmd_drazin(opt, tol, out);
    if (*witness) return cmd_witness(opt, tol, out);
    if (*classify) return cmd_classify(opt, tol, out);
    if (*verify) return cmd_verify(opt, tol, out);
    if (*gen) return cmd_generate(opt, tol, out);
    if (*suite) return cmd_suite(opt, tol, out);
  } catch (const ParseError& e) {
    err << "drazin-lab: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // UsageError, DimensionError, ArityError, bad tolerances
    err << "drazin-lab: " << e.what() << "\n";
    return kUsage;
  } catch (const GenerationError& e) {
    err << "drazin-lab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "drazin-lab: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace drazin_lab::cli
