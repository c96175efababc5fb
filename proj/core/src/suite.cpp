#include "drazin_lab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace drazin_lab {

bool SuiteCase::pass() const {
  if (!error.empty()) return false;
  const bool flags_ok = std::all_of(flags.begin(), flags.end(),
                                    [](const auto& kv) { return kv.second.first == kv.second.second; });
  return flags_ok && std::all_of(outcomes.begin(), outcomes.end(),
                                 [](const OutcomeCheck& o) { return o.ok(); });
}

std::size_t SuiteResult::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass(); }));
}

std::map<std::string, VerdictTally> SuiteResult::by_id() const {
  std::map<std::string, VerdictTally> out;
  for (const auto& c : cases) {
    for (const auto& o : c.outcomes) {
      auto& t = out[o.id];
      if (!o.got) {
        ++t.error;
      } else if (*o.got == Verdict::pass) {
        ++t.pass;
      } else if (*o.got == Verdict::fail) {
        ++t.fail;
      } else {
        ++t.hypotheses_not_met;
      }
      if (!o.ok()) ++t.mismatches;
    }
  }
  return out;
}

std::vector<FamilySpec> suite_specs(const SuiteConfig& config) {
  std::vector<FamilySpec> specs;
  for (Family f : kAllFamilies) {
    if (auto d = fixed_dim(f); d && f != Family::INVOLUTORY_SIM) {
      specs.push_back({f, *d, config.seed_first, {}});
      continue;
    }
    for (std::uint64_t s = config.seed_first; s <= config.seed_last; ++s) {
      if (f == Family::INVOLUTORY_SIM) {
        specs.push_back({f, 3, s, {}});
      } else {
        for (std::size_t n = std::max<std::size_t>(config.dim_first, 2); n <= config.dim_last; ++n) {
          std::vector<double> params;
          if (f == Family::CONJUGATION) params = {static_cast<double>(s % 3)};
          const std::vector<double> split = {static_cast<double>(s % 5),
                                             static_cast<double>((s / 5) % 2)};
          if (f == Family::BLOCK_SPLIT) params = split;
          // Negative controls start from ab-weak CONJUGATION pairs; commuting
          // bases often admit no perturbation that breaks only one relation.
          if (f == Family::NEGATIVE_CONTROL) {
            params = {static_cast<double>(Family::CONJUGATION), static_cast<double>(s % 2),
                      static_cast<double>(1 + (s / 2) % 2)};
          }
          specs.push_back({f, n, s, std::move(params)});
        }
      }
      if (s == config.seed_last) break;  // seed_last may be UINT64_MAX
    }
  }
  return specs;
}

namespace {

SuiteCase run_case(const FamilySpec& spec, const Tolerance& tol) {
  SuiteCase out;
  out.spec = spec;
  try {
    const GeneratedInstance inst = generate(spec);
    const RelationClass cls = classify_pair(inst.a, inst.b, tol);
    for (const auto& [flag, expected] : inst.expected_class) {
      out.flags[flag] = {expected, cls.has(flag)};
    }
    out.outcomes = check_outcomes(inst, tol);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config) {
  config.tol.validate();
  const auto specs = suite_specs(config);
  SuiteResult result;
  result.config = config;
  result.cases.resize(specs.size());

  unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      result.cases[i] = run_case(specs[i], config.tol);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  return result;
}

Json to_json(const SuiteResult& result) {
  Json out;
  Json cfg;
  cfg["seeds"] = {result.config.seed_first, result.config.seed_last};
  cfg["dims"] = {result.config.dim_first, result.config.dim_last};
  cfg["rank_tol"] = result.config.tol.rank_rel;
  cfg["resid_tol"] = result.config.tol.residual_rel;
  out["config"] = std::move(cfg);
  const std::size_t passed = result.passed();
  out["total"] = result.cases.size();
  out["passed"] = passed;
  out["failed"] = result.cases.size() - passed;

  Json ids = Json::object();
  for (const auto& [id, t] : result.by_id()) {
    Json j;
    j["pass"] = t.pass;
    j["fail"] = t.fail;
    j["hypotheses-not-met"] = t.hypotheses_not_met;
    j["error"] = t.error;
    j["mismatches"] = t.mismatches;
    ids[id] = std::move(j);
  }
  out["by_id"] = std::move(ids);

  Json fams = Json::object();
  for (Family f : kAllFamilies) {
    std::size_t total = 0;
    std::size_t ok = 0;
    for (const auto& c : result.cases) {
      if (c.spec.family != f) continue;
      ++total;
      ok += c.pass() ? 1 : 0;
    }
    if (total == 0) continue;
    Json j;
    j["total"] = total;
    j["passed"] = ok;
    fams[std::string(to_string(f))] = std::move(j);
  }
  out["by_family"] = std::move(fams);

  Json failures = Json::array();
  for (const auto& c : result.cases) {
    if (c.pass()) continue;
    Json j;
    j["spec"] = to_json(c.spec);
    if (!c.error.empty()) j["error"] = c.error;
    Json flags = Json::array();
    for (const auto& [flag, eg] : c.flags) {
      if (eg.first != eg.second) {
        flags.push_back({{"flag", std::string(to_string(flag))}, {"expected", eg.first}, {"got", eg.second}});
      }
    }
    j["flag_mismatches"] = std::move(flags);
    Json outs = Json::array();
    for (const auto& o : c.outcomes) {
      if (o.ok()) continue;
      Json oj;
      oj["id"] = o.id;
      oj["expected"] = std::string(to_string(o.expected));
      oj["got"] = o.got ? Json(std::string(to_string(*o.got))) : Json(nullptr);
      oj["deviation"] = o.deviation;
      oj["detail"] = o.detail;
      outs.push_back(std::move(oj));
    }
    j["outcome_mismatches"] = std::move(outs);
    failures.push_back(std::move(j));
  }
  out["failures"] = std::move(failures);
  return out;
}

}  // namespace drazin_lab
