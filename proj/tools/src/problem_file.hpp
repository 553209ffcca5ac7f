#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "resum/benchmarks.hpp"
#include "resum/numerics.hpp"
#include "resum/selector.hpp"
#include "resum/series.hpp"
#include "resum/transforms.hpp"

namespace resum::cli {

// Flat key/value document:
//
//   # comment
//   name = anomalous-dimension
//   beta = -0.5
//   coefficient = 4
//   coefficient = -13.1595
//   kind = frac-integral, borel-leroy     (or all)
//   criterion = all
//   grid = -8:3:2201
//   k = 3
//   quantity = amplitude                  (index sums the diff-log instead)
struct ProblemFile {
  std::string name;
  std::vector<std::string> coefficients;
  std::string beta;
  std::vector<TransformKind> kinds;  // empty: every kind
  std::vector<Method> methods;       // empty: every method
  std::optional<numerics::ScanGrid> grid;
  std::optional<int> k;
  Quantity quantity = Quantity::Amplitude;

  /// Coefficients as parsed, truncated at k, diff-logged for index problems.
  TruncatedSeries series() const;
  double summed_beta() const;
};

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

ProblemFile parse_problem(std::string_view text);
/// Throws ParseError, or std::runtime_error when the file cannot be read.
ProblemFile load_problem(const std::filesystem::path& path);
/// Inverse of parse_problem; coefficient strings are written back untouched.
std::string format_problem(const ProblemFile& p);

/// "all" or a comma separated list; throws std::invalid_argument.
std::vector<TransformKind> parse_kinds(std::string_view text);
std::vector<Method> parse_methods(std::string_view text);

}  // namespace resum::cli
