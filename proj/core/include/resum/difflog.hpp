#pragma once

#include "resum/numerics.hpp"
#include "resum/selector.hpp"
#include "resum/series.hpp"
#include "resum/transforms.hpp"

namespace resum {

struct IndexEstimate {
  double beta_estimate;
  double u;
  Method method;
  TransformKind kind;
};

namespace difflog {

/// Series whose x^{-1} amplitude at infinity is the critical index of s.
TruncatedSeries index_series(const TruncatedSeries& s);

/// Exponent the index series is summed against.
inline constexpr double kIndexExponent = -1.0;

/// Critical index of s from the amplitude of its diff-log series against x^{-1}.
/// Roots of both conditions are pooled and selected by method (or ridge-minimized).
/// Throws NoDefinedPointError when no exact root exists for a criterion method.
IndexEstimate estimate_index(const TruncatedSeries& s, TransformKind kind,
                             const numerics::ScanGrid& grid, Method method);

}  // namespace difflog
}  // namespace resum
