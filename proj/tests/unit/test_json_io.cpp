#include <limits>
#include <string>

#include <gtest/gtest.h>

#include "drazin_lab/errors.hpp"
#include "drazin_lab/formulas.hpp"
#include "drazin_lab/json_io.hpp"
#include "drazin_lab/rng.hpp"
#include "fixtures.hpp"

namespace {

using namespace drazin_lab;

std::string message_of(const std::string& text) {
  try {
    parse_matrix(text, "m.json");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(JsonIo, MatrixRoundTripIsBitIdentical) {
  Rng rng(211);
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix m = gaussian_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5) * 1e3;
    EXPECT_EQ(parse_matrix(dump(to_json(m))), m);
  }
  const ComplexMatrix edge = ComplexMatrix::from_rows(
      {{std::numeric_limits<double>::denorm_min(), {-0.0, 1e308}}, {0.1, {1.0 / 3.0, -2.5e-300}}});
  EXPECT_EQ(parse_matrix(dump(to_json(edge))), edge);
}

TEST(JsonIo, MatrixLayout) {
  const Json j = to_json(ComplexMatrix::from_rows({{1, {0, 2}}, {3, 4}}));
  EXPECT_EQ(j.dump(), R"({"rows":2,"cols":2,"data":[[1.0,0.0],[0.0,2.0],[3.0,0.0],[4.0,0.0]]})");
  EXPECT_EQ(dump(Json::object({{"k", 1}})), "{\n  \"k\": 1\n}\n");
}

TEST(JsonIo, ErrorsNameTheField) {
  EXPECT_NE(message_of(R"({"rows":1,"cols":2,"data":[[1,0],[1,"x"]]})").find("data[1][1]"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"rows":1,"cols":2,"data":[[1,0]]})").find("expected 2 entries"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"rows":1,"data":[]})").find("\"cols\""), std::string::npos);
  EXPECT_NE(message_of(R"({"rows":-1,"cols":1,"data":[]})").find("rows"), std::string::npos);
  EXPECT_NE(message_of(R"({"rows":1,"cols":1,"data":[[1]]})").find("data[0]"), std::string::npos);
  EXPECT_NE(message_of("{\"rows\":1,\n \"cols\" 1}").find("m.json:2:"), std::string::npos);
  EXPECT_NE(message_of("[1, 2]").find("expected an object"), std::string::npos);
}

TEST(JsonIo, LoadMissingFile) {
  EXPECT_THROW(load_matrix("/nonexistent/matrix.json"), ParseError);
}

TEST(JsonIo, FamilySpecRoundTrip) {
  const FamilySpec s{Family::BLOCK_SPLIT, 6, 12345678901234ULL, {2, 1, 0}};
  const FamilySpec back = parse_family_spec(dump(to_json(s)));
  EXPECT_EQ(back.family, s.family);
  EXPECT_EQ(back.dim, s.dim);
  EXPECT_EQ(back.seed, s.seed);
  EXPECT_EQ(back.params, s.params);

  const FamilySpec minimal = parse_family_spec(R"({"family":"PAPER_EX_3_4"})");
  EXPECT_EQ(minimal.family, Family::PAPER_EX_3_4);
  EXPECT_EQ(minimal.dim, 0U);
  EXPECT_TRUE(minimal.params.empty());

  EXPECT_THROW(parse_family_spec(R"({"family":"NOPE"})"), ParseError);
  EXPECT_THROW(parse_family_spec(R"({"family":"CONJUGATION","params":[1,"a"]})"), ParseError);
  EXPECT_THROW(parse_family_spec(R"({"dim":3})"), ParseError);
}

TEST(JsonIo, ReportFieldOrder) {
  VerificationReport r = product_drazin(fixtures::ex34_a(1.0), fixtures::ex34_b(1.0), Tolerance{});
  r.seed = 7;
  r.family = "PAPER_EX_3_4";
  const Json j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> expected{"formula", "verdict",  "deviation",      "hypotheses",
                                          "seed",    "family",   "checks",         "notes",
                                          "formula_output",      "oracle_output"};
  EXPECT_EQ(keys, expected);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["hypotheses"][0].size(), 3U);
}

TEST(JsonIo, NotMetReportOmitsOutputs) {
  const VerificationReport r =
      product_drazin(fixtures::ex16_a(), fixtures::ex16_b(), Tolerance{});
  const Json j = to_json(r);
  EXPECT_EQ(j["verdict"], "hypotheses-not-met");
  EXPECT_FALSE(j.contains("formula_output"));
  EXPECT_FALSE(j.contains("seed"));
}

}  // namespace
