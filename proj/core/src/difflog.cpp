#include "resum/difflog.hpp"

#include <stdexcept>

#include "resum/benchmarks.hpp"
#include "resum/errors.hpp"

namespace resum::difflog {

TruncatedSeries index_series(const TruncatedSeries& s) {
  if (s.order() < 2) throw std::invalid_argument("index_series: need order >= 2");
  return series::diff_log(s);
}

IndexEstimate estimate_index(const TruncatedSeries& s, TransformKind kind,
                             const numerics::ScanGrid& grid, Method method) {
  const auto report = benchmarks::analyze_kind(index_series(s), kIndexExponent, kind, grid);
  const auto& cell = report.result(method);
  if (cell.status != RowStatus::ExactRoot)
    throw NoDefinedPointError("estimate_index: no defined estimate for " +
                              std::string(to_string(method)));
  return {cell.amplitude, cell.u, method, kind};
}

}  // namespace resum::difflog
