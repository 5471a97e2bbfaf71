#include <doctest.h>

#include <sstream>

#include "marsrank/error.hpp"
#include "marsrank/mars_core.hpp"
#include "marsrank/matrix_io.hpp"
#include "marsrank/scenarios.hpp"
#include "oracles.hpp"

using namespace marsrank;
using io::Format;

namespace {

ErrorCode code_of(std::string_view text, Format format) {
  try {
    (void)io::parse_matrix(text, format);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("minimal CSV parses to a 1x2 matrix") {
  const auto m = io::parse_matrix("dataset,A,B\nd0,0.5,0.5\n", Format::Csv);
  CHECK(m.methods() == 2);
  CHECK(m.datasets() == 1);
  CHECK(m.at(0, 0) == 0.5);
  CHECK(m.direction() == Direction::HigherBetter);
}

TEST_CASE("scenario 1 CSV keeps order and dimensions") {
  const auto csv = io::to_csv(scenarios::generate_scenario({1, 0}));
  const auto m = io::parse_matrix(csv, Format::Csv);
  CHECK(m.methods() == 3);
  CHECK(m.datasets() == 40);
  CHECK(m.method_names() == std::vector<std::string>{"A", "B", "C"});
  CHECK(m.dataset_names().front() == "D0");
  CHECK(m.at(0, 0) == 0.95);
  CHECK(m.at(39, 1) == 0.95);
}

TEST_CASE("CSV tolerates CRLF, BOM, spaces and a missing final newline") {
  const auto m = io::parse_matrix("\xEF\xBB\xBF" "dataset, A ,B\r\nx, 1.5 ,+2\r\ny,3e-1,4", Format::Csv);
  CHECK(m.method_names() == std::vector<std::string>{"A", "B"});
  CHECK(m.at(0, 1) == 2.0);
  CHECK(m.at(1, 0) == 0.3);
}

TEST_CASE("CSV errors") {
  CHECK(code_of("dataset,A,B\nd0,abc,0.5\n", Format::Csv) == ErrorCode::MalformedInput);
  CHECK(code_of("dataset,A,B\nd0,0.5\n", Format::Csv) == ErrorCode::MalformedInput);
  CHECK(code_of("dataset,A,B\nd0,0.5,0.1,0.2\n", Format::Csv) == ErrorCode::MalformedInput);
  CHECK(code_of("name,A,B\nd0,0.5,0.5\n", Format::Csv) == ErrorCode::MalformedInput);
  CHECK(code_of("dataset,A,A\nd0,0.5,0.5\n", Format::Csv) == ErrorCode::MalformedInput);
  CHECK(code_of("dataset,A,B\nd0,1,2\nd0,1,2\n", Format::Csv) == ErrorCode::MalformedInput);
  CHECK(code_of("dataset,A,B\nd0,,2\n", Format::Csv) == ErrorCode::MalformedInput);
  CHECK(code_of("dataset,A\nd0,0.5\n", Format::Csv) == ErrorCode::TooFewMethods);
  CHECK(code_of("dataset,A,B\n", Format::Csv) == ErrorCode::EmptyMatrix);
  CHECK(code_of("", Format::Csv) == ErrorCode::MalformedInput);
  CHECK(code_of("dataset,A,B\nd0,nan,1\n", Format::Csv) == ErrorCode::NonFiniteValue);
  CHECK(code_of("dataset,A,B\nd0,inf,1\n", Format::Csv) == ErrorCode::NonFiniteValue);
}

TEST_CASE("JSON input with direction") {
  const auto m = io::parse_matrix(
      R"({"methods":["A","B"],"datasets":["x","y"],"values":[[0.2,0.5],[1,2]],"direction":"lower"})",
      Format::Json);
  CHECK(m.direction() == Direction::LowerBetter);
  CHECK(m.at(1, 1) == 2.0);

  CHECK(code_of(R"({"methods":["A","B"],"datasets":["x"],"values":[[1]]})", Format::Json) ==
        ErrorCode::MalformedInput);
  CHECK(code_of(R"({"methods":["A","B"],"datasets":["x"],"values":[[1,"q"]]})", Format::Json) ==
        ErrorCode::MalformedInput);
  CHECK(code_of(R"({"methods":["A"],"datasets":["x"],"values":[[1]]})", Format::Json) ==
        ErrorCode::TooFewMethods);
  CHECK(code_of(R"({"methods":["A","B"],"datasets":[],"values":[]})", Format::Json) ==
        ErrorCode::EmptyMatrix);
  CHECK(code_of(R"({"methods":["A","B"],"datasets":["x"],"values":[[1,2]],"direction":"up"})",
                Format::Json) == ErrorCode::MalformedInput);
  CHECK(code_of("{not json", Format::Json) == ErrorCode::MalformedInput);
}

TEST_CASE("format follows the file extension") {
  CHECK(io::format_for_path("a/b.JSON") == Format::Json);
  CHECK(io::format_for_path("a/b.csv") == Format::Csv);
  CHECK(io::format_for_path("-") == Format::Csv);
}

TEST_CASE("orient") {
  const PerformanceMatrix lower({"A", "B"}, {"d"}, {0.2, 0.5}, Direction::LowerBetter);
  const auto up = io::orient(lower);
  CHECK(up.direction() == Direction::HigherBetter);
  CHECK(up.at(0, 0) == -0.2);
  CHECK(up.at(0, 1) == -0.5);

  const PerformanceMatrix higher({"A", "B"}, {"d"}, {0.2, 0.5});
  CHECK(io::orient(higher) == higher);
}

TEST_CASE("property: orient swaps best and worst, keeps weights of re-oriented input") {
  oracle::Generator gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 3;
    auto row = gen.grid_row(k);
    const PerformanceMatrix lower({"A", "B", "C"}, {"d"}, row, Direction::LowerBetter);
    const auto once = io::orient(lower);
    const auto twice = io::orient(once);
    CHECK(mars::weight_row(twice.row(0)) == mars::weight_row(once.row(0)));

    const auto best_lower = std::ranges::min_element(row) - row.begin();
    const auto flipped = once.row(0);
    const auto best_oriented = std::ranges::max_element(flipped) - flipped.begin();
    CHECK(row[static_cast<std::size_t>(best_lower)] == -flipped[static_cast<std::size_t>(best_oriented)]);
  }
}

TEST_CASE("property: parse . serialize . parse is identity") {
  oracle::Generator gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = gen.size(2, 6);
    const std::size_t n = gen.size(1, 8);
    std::vector<std::string> methods, datasets;
    for (std::size_t j = 0; j < k; ++j) methods.push_back("m" + std::to_string(j));
    for (std::size_t i = 0; i < n; ++i) datasets.push_back("ds " + std::to_string(i));
    std::vector<double> values(n * k);
    for (auto& v : values) v = gen.real(-1e3, 1e3);
    const auto dir = trial % 2 ? Direction::LowerBetter : Direction::HigherBetter;
    const PerformanceMatrix m(methods, datasets, values, dir);

    CHECK(io::parse_matrix(io::to_json(m), Format::Json) == m);
    const auto via_csv = io::with_direction(io::parse_matrix(io::to_csv(m), Format::Csv), dir);
    CHECK(via_csv == m);
  }
}
