#include "resum/selector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "resum/errors.hpp"

namespace resum {

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::Lasso1: return "lasso1";
    case Criterion::Lasso2: return "lasso2";
    case Criterion::GenLasso1: return "genlass1";
    case Criterion::GenLasso2: return "genlass2";
  }
  return "unknown";
}

Criterion parse_criterion(std::string_view name) {
  for (Criterion c : kAllCriteria) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown criterion '" + std::string(name) + "'");
}

std::string_view to_string(Method m) {
  if (auto c = criterion_of(m)) return to_string(*c);
  return "ridge";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::optional<Criterion> criterion_of(Method m) noexcept {
  switch (m) {
    case Method::GenLasso1: return Criterion::GenLasso1;
    case Method::GenLasso2: return Criterion::GenLasso2;
    case Method::Lasso1: return Criterion::Lasso1;
    case Method::Lasso2: return Criterion::Lasso2;
    case Method::Ridge: return std::nullopt;
  }
  return std::nullopt;
}

Method method_of(Criterion c) noexcept {
  switch (c) {
    case Criterion::Lasso1: return Method::Lasso1;
    case Criterion::Lasso2: return Method::Lasso2;
    case Criterion::GenLasso1: return Method::GenLasso1;
    case Criterion::GenLasso2: return Method::GenLasso2;
  }
  return Method::Ridge;
}

namespace selector {

double score(Criterion c, const TruncatedSeries& s, TransformKind kind, double u) {
  const auto b = transforms::transform_coefficients(s, kind, u).b;
  const int k = s.order();
  double acc = 0.0;
  switch (c) {
    case Criterion::Lasso1:
      for (int n = 0; n <= k; ++n) acc += std::abs(b[n]);
      return acc;
    case Criterion::Lasso2:
      for (int n = 0; n <= k; ++n) {
        if (s[n] != 0.0) acc += std::abs(b[n] / s[n]);
      }
      return acc;
    case Criterion::GenLasso1: {
      const auto ref = transforms::transform_coefficients(s, kind, transforms::borel_point(kind)).b;
      for (int n = 0; n <= k; ++n) {
        if (ref[n] == 0.0) {
          if (s[n] == 0.0) continue;
          throw ZeroReferenceCoefficientError("genlasso1: b_n(u0) = 0 at n=" + std::to_string(n));
        }
        acc += std::abs((b[n] - ref[n]) / ref[n]);
      }
      return acc / (k + 1);
    }
    case Criterion::GenLasso2:
      for (int n = 0; n <= k; ++n) {
        if (s[n] != 0.0) acc += std::abs((b[n] - s[n]) / s[n]);
      }
      return acc / (k + 1);
  }
  throw std::logic_error("score: bad criterion");
}

SelectionResult select(Criterion c, const TruncatedSeries& s, TransformKind kind,
                       std::vector<OptimizationSolution> solutions) {
  if (solutions.empty()) throw EmptySolutionSetError("no solutions to select from");
  optimizer::sort_solutions(solutions);

  SelectionResult r{solutions.front(), c, 0.0, {}};
  std::size_t best = 0;
  for (std::size_t j = 0; j < solutions.size(); ++j) {
    const double v = score(c, s, kind, solutions[j].u);
    r.all_scores.emplace_back(solutions[j].u, v);
    // Strict comparison keeps the earlier, larger u on ties.
    if (std::isfinite(v) && (!std::isfinite(r.all_scores[best].second) || v < r.all_scores[best].second))
      best = j;
  }
  r.chosen = solutions[best];
  r.score = r.all_scores[best].second;
  return r;
}

SelectionResult lasso1(const TruncatedSeries& s, TransformKind kind,
                       std::vector<OptimizationSolution> solutions) {
  return select(Criterion::Lasso1, s, kind, std::move(solutions));
}

SelectionResult lasso2(const TruncatedSeries& s, TransformKind kind,
                       std::vector<OptimizationSolution> solutions) {
  return select(Criterion::Lasso2, s, kind, std::move(solutions));
}

SelectionResult genlasso1(const TruncatedSeries& s, TransformKind kind,
                          std::vector<OptimizationSolution> solutions) {
  return select(Criterion::GenLasso1, s, kind, std::move(solutions));
}

SelectionResult genlasso2(const TruncatedSeries& s, TransformKind kind,
                          std::vector<OptimizationSolution> solutions) {
  return select(Criterion::GenLasso2, s, kind, std::move(solutions));
}

}  // namespace selector
}  // namespace resum
