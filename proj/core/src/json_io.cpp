#include "drazin_lab/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "drazin_lab/errors.hpp"

namespace drazin_lab {
namespace {

std::string field(std::string_view where, std::string_view path) {
  std::string out(where);
  if (!out.empty() && !path.empty()) out += ": ";
  out += path.empty() ? "<root>" : std::string(path);
  return out;
}

[[noreturn]] void fail(std::string_view where, std::string_view path, std::string_view what) {
  throw ParseError(field(where, path) + ": " + std::string(what));
}

const Json& member(const Json& obj, std::string_view where, std::string_view path,
                   const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    fail(where, path, std::string("missing required field \"") + key + "\"");
  }
  return *it;
}

std::size_t as_size(const Json& j, std::string_view where, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(where, path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

double as_double(const Json& j, std::string_view where, const std::string& path) {
  if (!j.is_number()) fail(where, path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, path, "expected a finite number");
  return v;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Json optional_matrix(const std::optional<ComplexMatrix>& m) {
  return m ? to_json(*m) : Json(nullptr);
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) data.push_back({m(i, j).real(), m(i, j).imag()});
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

ComplexMatrix matrix_from_json(const Json& j, std::string_view where) {
  if (!j.is_object()) fail(where, "", "expected an object with rows, cols and data");
  const std::size_t rows = as_size(member(j, where, "", "rows"), where, "rows");
  const std::size_t cols = as_size(member(j, where, "", "cols"), where, "cols");
  const Json& data = member(j, where, "", "data");
  if (!data.is_array()) fail(where, "data", "expected an array of [re, im] pairs");
  if (data.size() != rows * cols) {
    std::ostringstream msg;
    msg << "expected " << rows * cols << " entries (rows x cols), got " << data.size();
    fail(where, "data", msg.str());
  }
  Eigen::MatrixXcd m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t k = 0; k < data.size(); ++k) {
    const std::string path = "data[" + std::to_string(k) + "]";
    const Json& entry = data[k];
    if (!entry.is_array() || entry.size() != 2) fail(where, path, "expected a [re, im] pair");
    const double re = as_double(entry[0], where, path + "[0]");
    const double im = as_double(entry[1], where, path + "[1]");
    m(static_cast<Index>(k / cols), static_cast<Index>(k % cols)) = Complex(re, im);
  }
  return ComplexMatrix(std::move(m));
}

Json parse_json_text(std::string_view text, std::string_view where) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream msg;
    msg << where << ":" << line << ":" << col << ": invalid JSON";
    // nlohmann's message after the "parse error ... :" prefix
    const std::string what = e.what();
    const auto pos = what.find(": ", what.find("parse error"));
    if (pos != std::string::npos) msg << " (" << what.substr(pos + 2) << ")";
    throw ParseError(msg.str());
  }
}

ComplexMatrix parse_matrix(std::string_view text, std::string_view where) {
  return matrix_from_json(parse_json_text(text, where), where);
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), path.string());
}

Json to_json(const DrazinResult& r) {
  Json out;
  out["d_inverse"] = to_json(r.d_inverse);
  out["index"] = r.index;
  out["projector"] = to_json(r.projector);
  out["core_dim"] = r.core_dim;
  out["core_condition"] = r.core_condition;
  out["warnings"] = r.warnings;
  return out;
}

Json to_json(const WitnessResult& w) {
  Json out;
  out["exists"] = w.exists();
  out["witness"] = optional_matrix(w.witness);
  out["candidate"] = to_json(w.candidate);
  out["residual"] = w.residual;
  out["normalized_residual"] = w.normalized_residual();
  out["threshold"] = w.threshold;
  out["solution_space_dim"] = w.solution_space_dim;
  return out;
}

Json to_json(const RelationClass& c) {
  Json flags = Json::array();
  for (RelationFlag f : kAllRelationFlags) {
    if (c.has(f)) flags.push_back(std::string(to_string(f)));
  }
  Json residuals = Json::object();
  for (RelationFlag f : kAllRelationFlags) {
    if (auto it = c.residuals.find(f); it != c.residuals.end()) {
      residuals[std::string(to_string(f))] = it->second;
    }
  }
  Json out;
  out["flags"] = std::move(flags);
  out["a_witness"] = optional_matrix(c.a_witness);
  out["b_witness"] = optional_matrix(c.b_witness);
  out["residuals"] = std::move(residuals);
  return out;
}

Json to_json(const Check& c) {
  Json out;
  out["name"] = c.name;
  out["residual"] = c.residual;
  out["pass"] = c.pass;
  return out;
}

Json to_json(const VerificationReport& r) {
  Json out;
  out["formula"] = r.formula;
  out["verdict"] = std::string(to_string(r.verdict));
  out["deviation"] = r.deviation;
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses) hyps.push_back(to_json(h));
  out["hypotheses"] = std::move(hyps);
  if (r.seed) out["seed"] = *r.seed;
  if (r.family) out["family"] = *r.family;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  out["checks"] = std::move(checks);
  out["notes"] = r.notes;
  if (r.formula_output) out["formula_output"] = to_json(*r.formula_output);
  if (r.oracle_output) out["oracle_output"] = to_json(*r.oracle_output);
  return out;
}

Json to_json(const FamilySpec& s) {
  Json out;
  out["family"] = std::string(to_string(s.family));
  out["dim"] = s.dim;
  out["seed"] = s.seed;
  out["params"] = s.params;
  return out;
}

FamilySpec family_spec_from_json(const Json& j, std::string_view where) {
  if (!j.is_object()) fail(where, "", "expected a FamilySpec object");
  FamilySpec s;
  const Json& fam = member(j, where, "", "family");
  if (!fam.is_string()) fail(where, "family", "expected a string");
  const auto parsed = parse_family(fam.get<std::string>());
  if (!parsed) fail(where, "family", "unknown family \"" + fam.get<std::string>() + "\"");
  s.family = *parsed;
  if (auto it = j.find("dim"); it != j.end()) s.dim = as_size(*it, where, "dim");
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_integer()) fail(where, "seed", "expected an integer");
    s.seed = it->is_number_unsigned() ? it->get<std::uint64_t>()
                                      : static_cast<std::uint64_t>(it->get<std::int64_t>());
  }
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_array()) fail(where, "params", "expected an array of numbers");
    for (std::size_t k = 0; k < it->size(); ++k) {
      s.params.push_back(as_double((*it)[k], where, "params[" + std::to_string(k) + "]"));
    }
  }
  return s;
}

FamilySpec parse_family_spec(std::string_view text, std::string_view where) {
  return family_spec_from_json(parse_json_text(text, where), where);
}

Json to_json(const GeneratedInstance& inst) {
  Json out;
  out["spec"] = to_json(inst.spec);
  out["a"] = to_json(inst.a);
  out["b"] = to_json(inst.b);
  out["c"] = optional_matrix(inst.c);
  Json cls = Json::object();
  for (const auto& [flag, value] : inst.expected_class) cls[std::string(to_string(flag))] = value;
  out["expected_class"] = std::move(cls);
  Json outcomes = Json::object();
  for (const auto& [id, v] : inst.expected_outcomes) outcomes[id] = std::string(to_string(v));
  out["expected_outcomes"] = std::move(outcomes);
  out["broken_hypothesis"] = inst.broken_hypothesis ? Json(*inst.broken_hypothesis) : Json(nullptr);
  out["notes"] = inst.notes;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace drazin_lab
