#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "drazin_lab/drazin.hpp"
#include "drazin_lab/generators.hpp"
#include "drazin_lab/matrix.hpp"
#include "drazin_lab/report.hpp"
#include "drazin_lab/weakcommute.hpp"

namespace drazin_lab {

/// Insertion-ordered, so emitted field order follows the schemas.
using Json = nlohmann::ordered_json;

/// {"rows": m, "cols": n, "data": [[re, im], ...]} in row-major order.
Json to_json(const ComplexMatrix& m);

/// Throws ParseError naming the offending field, e.g. "data[4][1]".
/// `where` prefixes the field path in messages (typically a file name).
ComplexMatrix matrix_from_json(const Json& j, std::string_view where = "");

/// Parses text; syntax errors are reported with line and column.
Json parse_json_text(std::string_view text, std::string_view where = "<input>");
ComplexMatrix parse_matrix(std::string_view text, std::string_view where = "<input>");
ComplexMatrix load_matrix(const std::filesystem::path& path);

Json to_json(const DrazinResult& r);
Json to_json(const WitnessResult& w);
Json to_json(const RelationClass& c);
Json to_json(const Check& c);

/// {"formula", "verdict", "deviation", "hypotheses", "seed", "family"}, then
/// "checks", "notes", "formula_output" and "oracle_output". Absent optional
/// fields are omitted.
Json to_json(const VerificationReport& r);

Json to_json(const FamilySpec& s);
FamilySpec family_spec_from_json(const Json& j, std::string_view where = "");
FamilySpec parse_family_spec(std::string_view text, std::string_view where = "<input>");

Json to_json(const GeneratedInstance& inst);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace drazin_lab
