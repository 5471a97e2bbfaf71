#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "marsrank/matrix.hpp"

namespace marsrank::io {

enum class Format { Csv, Json };

// CSV: mandatory header `dataset,<m1>,...,<mk>`, then one row per dataset.
// Numbers are parsed with std::from_chars, so the decimal point is always '.'.
// CSV carries no orientation; the result is HigherBetter.
//
// JSON: {"methods": [...], "datasets": [...], "values": [[...], ...],
//        "direction": "higher" | "lower"}   (direction optional, default higher)
PerformanceMatrix parse_matrix(std::string_view text, Format format);
PerformanceMatrix parse_matrix(std::istream& in, Format format);

// `.json` (any case) selects JSON, everything else CSV.
Format format_for_path(std::string_view path);

// Shortest round-trip decimal for each value.
std::string to_csv(const PerformanceMatrix& matrix);
std::string to_json(const PerformanceMatrix& matrix);

PerformanceMatrix with_direction(const PerformanceMatrix& matrix, Direction direction);

// Negates every value of a LowerBetter matrix so downstream code only ever
// sees HigherBetter data. Identity for HigherBetter input.
PerformanceMatrix orient(const PerformanceMatrix& matrix);

std::string_view to_string(Direction direction) noexcept;
Direction parse_direction(std::string_view text);

}  // namespace marsrank::io
