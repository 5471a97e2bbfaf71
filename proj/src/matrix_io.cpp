#include "marsrank/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "marsrank/error.hpp"

namespace marsrank::io {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": " + msg);
}

double parse_number(std::string_view cell, std::size_t line_no) {
  double value = 0.0;
  const auto* first = cell.data();
  const auto* last = cell.data() + cell.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (cell.empty() || ec != std::errc() || ptr != last) {
    malformed(line_no, "'" + std::string(cell) + "' is not a number");
  }
  return value;
}

PerformanceMatrix parse_csv(std::string_view text) {
  std::vector<std::string> methods;
  std::vector<std::string> datasets;
  std::vector<double> values;
  bool have_header = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (trim(line).empty()) continue;

    const auto cells = split_cells(line);
    if (!have_header) {
      if (cells.front() != "dataset") {
        malformed(line_no, "header must start with 'dataset'");
      }
      for (std::size_t c = 1; c < cells.size(); ++c) {
        if (cells[c].empty()) malformed(line_no, "empty method name");
        methods.emplace_back(cells[c]);
      }
      if (methods.size() < 2) {
        throw Error(ErrorCode::TooFewMethods,
                    "need at least 2 methods, got " + std::to_string(methods.size()));
      }
      have_header = true;
      continue;
    }
    if (cells.size() != methods.size() + 1) {
      malformed(line_no, "expected " + std::to_string(methods.size() + 1) + " cells, got " +
                             std::to_string(cells.size()));
    }
    if (cells.front().empty()) malformed(line_no, "empty dataset name");
    datasets.emplace_back(cells.front());
    for (std::size_t c = 1; c < cells.size(); ++c) {
      values.push_back(parse_number(cells[c], line_no));
    }
  }
  if (!have_header) malformed(1, "missing header row");
  return PerformanceMatrix(std::move(methods), std::move(datasets), std::move(values));
}

template <typename T>
std::vector<T> string_list(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw Error(ErrorCode::MalformedInput, std::string("missing array '") + key + "'");
  }
  std::vector<T> out;
  for (const auto& item : doc[key]) {
    if (!item.is_string()) {
      throw Error(ErrorCode::MalformedInput, std::string("'") + key + "' must hold strings");
    }
    out.push_back(item.template get<T>());
  }
  return out;
}

PerformanceMatrix parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "expected a JSON object");

  auto methods = string_list<std::string>(doc, "methods");
  auto datasets = string_list<std::string>(doc, "datasets");
  if (methods.size() < 2) {
    throw Error(ErrorCode::TooFewMethods,
                "need at least 2 methods, got " + std::to_string(methods.size()));
  }
  if (!doc.contains("values") || !doc["values"].is_array()) {
    throw Error(ErrorCode::MalformedInput, "missing array 'values'");
  }
  const auto& rows = doc["values"];
  if (rows.size() != datasets.size()) {
    throw Error(ErrorCode::MalformedInput, "'values' has " + std::to_string(rows.size()) +
                                               " rows for " + std::to_string(datasets.size()) +
                                               " datasets");
  }
  std::vector<double> values;
  values.reserve(methods.size() * datasets.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != methods.size()) {
      throw Error(ErrorCode::MalformedInput,
                  "row " + std::to_string(i) + " must hold " + std::to_string(methods.size()) +
                      " numbers");
    }
    for (const auto& cell : row) {
      if (!cell.is_number()) {
        throw Error(ErrorCode::MalformedInput, "row " + std::to_string(i) + " has a non-number");
      }
      values.push_back(cell.get<double>());
    }
  }
  Direction direction = Direction::HigherBetter;
  if (doc.contains("direction")) {
    if (!doc["direction"].is_string()) {
      throw Error(ErrorCode::MalformedInput, "'direction' must be a string");
    }
    direction = parse_direction(doc["direction"].get<std::string>());
  }
  return PerformanceMatrix(std::move(methods), std::move(datasets), std::move(values), direction);
}

void append_number(std::string& out, double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(std::begin(buf), std::end(buf), value);
  out.append(buf, ptr);
}

}  // namespace

PerformanceMatrix parse_matrix(std::string_view text, Format format) {
  return format == Format::Csv ? parse_csv(text) : parse_json(text);
}

PerformanceMatrix parse_matrix(std::istream& in, Format format) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorCode::Io, "failed to read input stream");
  return parse_matrix(text, format);
}

Format format_for_path(std::string_view path) {
  if (path.size() < 5) return Format::Csv;
  std::string ext(path.substr(path.size() - 5));
  std::ranges::transform(ext, ext.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".json" ? Format::Json : Format::Csv;
}

std::string to_csv(const PerformanceMatrix& matrix) {
  std::string out = "dataset";
  for (const auto& name : matrix.method_names()) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (std::size_t i = 0; i < matrix.datasets(); ++i) {
    out += matrix.dataset_names()[i];
    for (double v : matrix.row(i)) {
      out += ',';
      append_number(out, v);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const PerformanceMatrix& matrix) {
  json doc;
  doc["methods"] = matrix.method_names();
  doc["datasets"] = matrix.dataset_names();
  json rows = json::array();
  for (std::size_t i = 0; i < matrix.datasets(); ++i) {
    const auto row = matrix.row(i);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  doc["values"] = std::move(rows);
  doc["direction"] = matrix.direction() == Direction::HigherBetter ? "higher" : "lower";
  return doc.dump(2) + "\n";
}

PerformanceMatrix with_direction(const PerformanceMatrix& matrix, Direction direction) {
  const auto values = matrix.values();
  return PerformanceMatrix(matrix.method_names(), matrix.dataset_names(),
                           std::vector<double>(values.begin(), values.end()), direction);
}

PerformanceMatrix orient(const PerformanceMatrix& matrix) {
  if (matrix.direction() == Direction::HigherBetter) return matrix;
  std::vector<double> negated(matrix.values().begin(), matrix.values().end());
  for (auto& v : negated) v = -v;
  return PerformanceMatrix(matrix.method_names(), matrix.dataset_names(), std::move(negated),
                           Direction::HigherBetter);
}

std::string_view to_string(Direction direction) noexcept {
  return direction == Direction::HigherBetter ? "higher" : "lower";
}

Direction parse_direction(std::string_view text) {
  if (text == "higher") return Direction::HigherBetter;
  if (text == "lower") return Direction::LowerBetter;
  throw Error(ErrorCode::MalformedInput,
              "direction must be 'higher' or 'lower', got '" + std::string(text) + "'");
}

}  // namespace marsrank::io
