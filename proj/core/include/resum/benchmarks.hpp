#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resum/numerics.hpp"
#include "resum/optimizer.hpp"
#include "resum/selector.hpp"
#include "resum/series.hpp"
#include "resum/transforms.hpp"

namespace resum {

enum class RowStatus { ExactRoot, Approximate, Undefined };
std::string_view to_string(RowStatus s);

/// What the large-variable limit of a problem determines.
enum class Quantity { Amplitude, Index };

struct BenchmarkProblem {
  std::string id;
  std::string title;
  /// Coefficients exactly as printed: decimals, "p/q" fractions or "m e-x".
  std::vector<std::string> printed;
  TruncatedSeries series;
  TargetAsymptotics target;
  /// Known factor in front of the summed series (amplitudes are reported with it).
  double prefactor = 1.0;
  std::optional<double> reference_amplitude;
  std::string reference_note;
  int usable_order = 0;
  Quantity quantity = Quantity::Amplitude;
  std::vector<std::string> errata;

  /// Series handed to the pipeline: prefactor * series, or its diff-log for index problems.
  TruncatedSeries summed_series() const;
  double summed_beta() const;
};

struct TableRow {
  std::string problem;
  TransformKind kind;
  Method method;
  double amplitude = 0.0;
  double u = 0.0;
  RowStatus status = RowStatus::Undefined;
};

/// Everything one transform kind yields for one series.
struct KindReport {
  TransformKind kind;
  Representation representation;
  int order;  // K, the highest order entering the conditions
  /// Exact roots of both conditions, pooled, u descending.
  std::vector<OptimizationSolution> solutions;
  /// Fallback minima reported when a condition has no exact root.
  std::vector<OptimizationSolution> approximate;
  std::array<TableRow, 5> rows;  // indexed like kAllMethods

  const TableRow& result(Method m) const;
};

struct ReferenceRow {
  TransformKind kind;
  std::array<std::optional<double>, 5> cells;  // kAllMethods order; nullopt for "--"
};

struct ReferenceTable {
  int number;
  std::string problem;
  int k;
  std::vector<ReferenceRow> rows;
  bool reproducible = true;
  std::string note;
  /// Allowed deviation per cell; relative unless absolute is set.
  double tolerance = 5e-3;
  bool absolute = false;
};

namespace benchmarks {

/// Parses "0.5642", "-3/16", "2.176347e-3". Throws std::invalid_argument.
double parse_printed(std::string_view text);

const std::vector<BenchmarkProblem>& registry();
/// Throws std::out_of_range for an unknown id.
const BenchmarkProblem& problem(std::string_view id);

/// a_n = 2 (-1)^n / (n + 2)!
TruncatedSeries generate_gaussian_polymer(int order);
/// Truncated product of exp(-x) and sum x^{2m} / (4^m m! (m + 1)!).
TruncatedSeries generate_wilson_loop(int order);

/// Control-parameter window searched for each transform kind by default.
numerics::ScanGrid default_grid(TransformKind kind);

/// base clipped to the parameter domain of kind; nullopt when nothing is left.
std::optional<numerics::ScanGrid> domain_grid(const numerics::ScanGrid& base, TransformKind kind,
                                              double beta, int order);

/// Solutions, selections and ridge minimum for one kind at the full order of s.
/// The minimal-difference condition uses orders K-1 and K, the minimal-derivative
/// condition order K, and the ridge cost the pair (K-1, K).
KindReport analyze_kind(const TruncatedSeries& s, double beta, TransformKind kind,
                        const numerics::ScanGrid& grid);
KindReport analyze_kind(const TruncatedSeries& s, double beta, TransformKind kind,
                        const numerics::ScanGrid& grid, Representation representation);

/// One row per (kind, method). grid overrides the per-kind default windows.
std::vector<TableRow> run_table(const BenchmarkProblem& p, const std::vector<TransformKind>& kinds,
                                const std::vector<Method>& methods,
                                const std::optional<numerics::ScanGrid>& grid = std::nullopt);

const std::vector<ReferenceTable>& reference_tables();
/// Throws std::out_of_range for an unknown table number.
const ReferenceTable& reference_table(int number);

}  // namespace benchmarks
}  // namespace resum
