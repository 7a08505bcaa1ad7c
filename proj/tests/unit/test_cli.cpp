#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "twreg/cli/commands.hpp"

using twreg::cplx;
namespace cli = twreg::cli;

namespace {

std::string op(const std::string& name) { return std::string(TWREG_DATA_DIR) + "/operators/" + name; }

cli::json classify_json(const std::string& name, int expected_exit = cli::exit_ok) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_classify(op(name), {}, out, err), expected_exit) << err.str();
  return cli::json::parse(out.str());
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

const char* source_doc = R"({"kind":"source","coefficients":{"a20":[1,0],"a11":[0,0],"a02":[1,0],
  "a10":[0,0],"a01":[0,0],"a00":[0,0]}})";

}  // namespace

TEST(Document, RoundTrip) {
  for (const char* name : {"twisted-laplacian.json", "b2.json", "a1.json", "harmonic-oscillator.json"}) {
    const auto doc = cli::load_document(op(name));
    const auto j = cli::document_to_json(doc);
    EXPECT_EQ(cli::document_to_json(cli::document_from_json(j)).dump(), j.dump()) << name;
    std::ifstream in(op(name));
    EXPECT_EQ(cli::json::parse(in).dump(), j.dump()) << name;
  }
}

TEST(Document, Options) {
  const auto doc = cli::parse_document(
      R"({"kind":"source","coefficients":{"a20":[1,0],"a11":[0,0],"a02":[1,0],"a10":[0,0],"a01":[0,0],
          "a00":[0,0]},"options":{"theta":1,"tol_zero":1e-10}})");
  ASSERT_TRUE(doc.options.theta.has_value());
  EXPECT_EQ(*doc.options.theta, 1.0);
  EXPECT_EQ(cli::tolerances_for(doc).zero, 1e-10);
  EXPECT_EQ(cli::tolerances_for(doc).lambda, twreg::ClassifyTolerances{}.lambda);
}

TEST(Document, Errors) {
  EXPECT_THROW(cli::load_document(op("malformed.json")), cli::input_error);
  EXPECT_THROW(cli::load_document(op("missing.json")), cli::input_error);
  EXPECT_THROW(cli::parse_document(R"({"kind":"other"})"), cli::input_error);
  EXPECT_THROW(cli::parse_document(R"({"kind":"source","coefficients":{"a20":[1,0]}})"), cli::input_error);
  EXPECT_THROW(cli::parse_document(R"({"kind":"source","coefficients":{"a20":1,"a11":[0,0],"a02":[0,0],
      "a10":[0,0],"a01":[0,0],"a00":[0,0]}})"),
               cli::input_error);
  // twisted needs a valid frame, source must not carry one
  const std::string coeffs = R"("coefficients":{"a20":[1,0],"a11":[0,0],"a02":[1,0],"a10":[0,0],"a01":[0,0],
      "a00":[0,0]})";
  EXPECT_THROW(cli::parse_document(R"({"kind":"twisted",)" + coeffs + "}"), cli::input_error);
  EXPECT_THROW(
      cli::parse_document(R"({"kind":"twisted",)" + coeffs + R"(,"frame":{"alpha":1,"beta":1,"gamma":1,"delta":1}})"),
      cli::input_error);
  EXPECT_THROW(cli::parse_document(R"({"kind":"source",)" + coeffs +
                                   R"(,"frame":{"alpha":-1,"beta":-0.5,"gamma":1,"delta":-0.5}})"),
               cli::input_error);
  EXPECT_THROW(cli::parse_document(R"({"kind":"source","coefficients":{"a20":[0,0],"a11":[0,0],"a02":[0,0],
      "a10":[1,0],"a01":[0,0],"a00":[0,0]}})"),
               cli::input_error);
  EXPECT_NO_THROW(cli::parse_document(source_doc));
}

TEST(ParseArgs, ComplexAndGrid) {
  EXPECT_EQ(cli::parse_complex("1.5,-2"), cplx(1.5, -2.0));
  EXPECT_EQ(cli::parse_complex("3"), cplx(3.0, 0.0));
  EXPECT_THROW(cli::parse_complex("1,x"), cli::input_error);
  EXPECT_THROW(cli::parse_complex(""), cli::input_error);
  const auto g = cli::parse_grid("-1:0.5:1");
  const auto xs = cli::grid_points(g);
  ASSERT_EQ(xs.size(), 5u);
  EXPECT_EQ(xs[2], 0.0);
  EXPECT_EQ(cli::grid_points(cli::parse_grid("-8:0.01:8")).size(), 1601u);
  EXPECT_THROW(cli::parse_grid("1:0:2"), cli::input_error);
  EXPECT_THROW(cli::parse_grid("2:1:1"), cli::input_error);
  EXPECT_THROW(cli::parse_grid("0:1"), cli::input_error);
}

TEST(Classify, TwistedLaplacian) {
  const auto j = classify_json("twisted-laplacian.json");
  EXPECT_EQ(j["twisted_regular"], true);
  EXPECT_EQ(j["matched_condition"], 833);
  EXPECT_LE(std::abs(j["lambda"][0].get<double>()), 1e-15);
  EXPECT_LE(std::abs(j["lambda"][1].get<double>()), 1e-15);
  ASSERT_EQ(j["roots"].size(), 2u);
  EXPECT_EQ(j["roots"][0]["root"], "+");
  EXPECT_EQ(j["roots"][0]["class"], "InS");
  EXPECT_EQ(j["roots"][1]["class"], "NotInSprime");
}

TEST(Classify, SourceExamples) {
  const auto b2 = classify_json("b2.json");
  EXPECT_EQ(b2["source_regular"], true);
  EXPECT_EQ(b2["source_injective"], true);
  EXPECT_EQ(b2["matched_condition"], 832);
  const auto free = classify_json("d2-minus-1.json");
  EXPECT_EQ(free["source_regular"], false);
  EXPECT_TRUE(free["source_injective"].is_null());
  EXPECT_TRUE(free["matched_condition"].is_null());
  const auto ground = classify_json("oscillator-mu1.json");
  EXPECT_EQ(ground["source_regular"], true);
  EXPECT_EQ(ground["source_injective"], false);
  EXPECT_EQ(ground["lambda_odd_positive"], true);
  EXPECT_EQ(classify_json("a1.json")["matched_condition"], 832);
}

TEST(Classify, ExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_classify(op("malformed.json"), {}, out, err), cli::exit_input);
  EXPECT_FALSE(err.str().empty());
  EXPECT_EQ(cli::cmd_classify(op("missing.json"), {}, out, err), cli::exit_input);
  cli::ClassifyFlags flags;
  flags.theta = 1.0;
  std::ostringstream shifted;
  EXPECT_EQ(cli::cmd_classify(op("harmonic-oscillator.json"), flags, shifted, err), cli::exit_ok);
  EXPECT_EQ(cli::json::parse(shifted.str())["theta_used"], 1.0);
}

TEST(Specfun, Examples) {
  auto run = [](cli::SpecfunArgs a) {
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_specfun(a, out, err), cli::exit_ok) << err.str();
    return cli::json::parse(out.str());
  };
  cli::SpecfunArgs a;
  a.function = "phi";
  a.p = 1.0;
  a.q = 2.0;
  a.z = 1.0;
  auto j = run(a);
  EXPECT_NEAR(j["value"][0].get<double>(), std::exp(1.0) - 1.0, 1e-14);
  EXPECT_EQ(j["route"], "series");

  a = {};
  a.function = "theta";
  a.p = 0.0;
  a.z = cplx(3.0, 1.0);
  j = run(a);
  EXPECT_NEAR(j["value"][0].get<double>(), 1.0, 1e-13);
  EXPECT_NEAR(j["value"][1].get<double>(), 0.0, 1e-13);

  a = {};
  a.function = "airy";
  j = run(a);
  EXPECT_NEAR(j["value"][0].get<double>(), 0.3550280538878172, 1e-15);

  a.z = 9.0;
  a.asym = 0;
  j = run(a);
  EXPECT_EQ(j["route"], "asymptotic");
  EXPECT_GT(j["est_remainder"].get<double>(), 0.0);
}

TEST(Specfun, SectorViolation) {
  cli::SpecfunArgs a;
  a.function = "theta";
  a.p = 0.5;
  a.z = cplx(-5.0, 0.1);
  a.asym = 2;
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_specfun(a, out, err), cli::exit_input);
}

TEST(Solve, ElementaryCase) {
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_solve(op("d2-plus-1.json"), 1.0, 0.0, cli::parse_grid("-2:0.5:2"), out, err), cli::exit_ok);
  const auto rows = csv_rows(out.str());
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "re_u", "im_u", "abs_u", "envelope"}));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double x = std::stod(rows[k][0]);
    EXPECT_NEAR(std::stod(rows[k][3]), std::exp(x), 1e-12 * std::exp(x)) << x;
  }
  EXPECT_EQ(rows[5][4], "NA");
}

TEST(Solve, ZeroCoefficients) {
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_solve(op("harmonic-oscillator.json"), 0.0, 0.0, cli::parse_grid("-1:1:1"), out, err),
            cli::exit_ok);
  const auto rows = csv_rows(out.str());
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_EQ(std::stod(rows[k][3]), 0.0);
    EXPECT_EQ(rows[k][4], "NA");
  }
}

TEST(Solve, EnvelopeTracksOscillator) {
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_solve(op("harmonic-oscillator.json"), 1.0, 0.0, cli::parse_grid("-8:0.5:8"), out, err),
            cli::exit_ok);
  const auto rows = csv_rows(out.str());
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double x = std::stod(rows[k][0]);
    if (std::abs(x) < 6.0) continue;
    const double u = std::stod(rows[k][3]), env = std::stod(rows[k][4]);
    EXPECT_LE(std::abs(u / env - 1.0), 0.25) << x;
  }
}

TEST(Solve, BadInput) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_solve(op("malformed.json"), 1.0, 0.0, cli::parse_grid("0:1:1"), out, err), cli::exit_input);
}

TEST(Verify, SmallSuite) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_verify("regression", twreg::verify::default_seed, 1, out, err), cli::exit_ok);
  std::istringstream lines(out.str());
  int n = 0;
  for (std::string line; std::getline(lines, line); ++n) {
    const auto j = cli::json::parse(line);
    EXPECT_TRUE(j.contains("name") && j.contains("residual") && j.contains("tolerance"));
    EXPECT_EQ(j["passed"], true);
  }
  EXPECT_GT(n, 0);
  std::ostringstream none;
  EXPECT_EQ(cli::cmd_verify("nonexistent", 1, 1, none, err), cli::exit_input);
}
