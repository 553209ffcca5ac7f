#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "resum/optimizer.hpp"
#include "resum/series.hpp"
#include "resum/transforms.hpp"

namespace resum {

enum class Criterion { Lasso1, Lasso2, GenLasso1, GenLasso2 };

/// Column order of the printed tables.
inline constexpr Criterion kAllCriteria[] = {Criterion::GenLasso1, Criterion::GenLasso2,
                                             Criterion::Lasso1, Criterion::Lasso2};

std::string_view to_string(Criterion c);
Criterion parse_criterion(std::string_view name);

/// A criterion applied to the pooled roots, or the ridge minimum.
enum class Method { GenLasso1, GenLasso2, Lasso1, Lasso2, Ridge };

inline constexpr Method kAllMethods[] = {Method::GenLasso1, Method::GenLasso2, Method::Lasso1,
                                         Method::Lasso2, Method::Ridge};

std::string_view to_string(Method m);
Method parse_method(std::string_view name);
std::optional<Criterion> criterion_of(Method m) noexcept;
Method method_of(Criterion c) noexcept;

struct SelectionResult {
  OptimizationSolution chosen;
  Criterion criterion;
  double score;
  std::vector<std::pair<double, double>> all_scores;  // (u_j, score)
};

namespace selector {

/// Score of one control parameter; every coefficient of s enters the sum.
///   Lasso1     sum |b_n(u)|
///   Lasso2     sum |b_n(u) / a_n|                  (a_n = 0 skipped)
///   GenLasso1  mean |(b_n(u) - b_n(u0)) / b_n(u0)|
///   GenLasso2  mean |(b_n(u) - a_n) / a_n|         (a_n = 0 skipped)
double score(Criterion c, const TruncatedSeries& s, TransformKind kind, double u);

/// Minimal-score solution. Ties go to the larger u.
/// Throws EmptySolutionSetError and ZeroReferenceCoefficientError.
SelectionResult select(Criterion c, const TruncatedSeries& s, TransformKind kind,
                       std::vector<OptimizationSolution> solutions);

SelectionResult lasso1(const TruncatedSeries& s, TransformKind kind,
                       std::vector<OptimizationSolution> solutions);
SelectionResult lasso2(const TruncatedSeries& s, TransformKind kind,
                       std::vector<OptimizationSolution> solutions);
SelectionResult genlasso1(const TruncatedSeries& s, TransformKind kind,
                          std::vector<OptimizationSolution> solutions);
SelectionResult genlasso2(const TruncatedSeries& s, TransformKind kind,
                          std::vector<OptimizationSolution> solutions);

}  // namespace selector
}  // namespace resum
