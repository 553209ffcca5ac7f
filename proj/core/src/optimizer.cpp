#include "resum/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "resum/approximant.hpp"
#include "resum/errors.hpp"

namespace resum {

Representation default_representation(TransformKind kind, double beta, int order) {
  return transforms::parameter_domain(kind, beta, order).empty() ? Representation::Reciprocal
                                                                 : Representation::Direct;
}

std::string_view to_string(Representation r) {
  return r == Representation::Reciprocal ? "reciprocal" : "direct";
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::MinDifference: return "min-difference";
    case Condition::MinDerivative: return "min-derivative";
    case Condition::BorelPoint: return "borel-point";
    case Condition::RidgeMinimum: return "ridge-minimum";
  }
  return "unknown";
}

namespace optimizer {
namespace {

constexpr double kRootTol = 1e-10;
constexpr double kResidualTol = 1e-6;
constexpr double kVanishTol = 1e-6;

numerics::PartialFunction curve_fn(const AmplitudeCurve& c) {
  return [c](double u) { return try_amplitude_at(c, u); };
}

// Keeps sign changes that are genuine zeros: poles of the condition also flip
// sign, and zeros of the amplitude factor make B vanish trivially.
bool accept_root(const AmplitudeCurve& report, double u, double cond) {
  if (transforms::amplitude_factor_vanishes(report.kind, working_beta(report.beta, report.representation), u,
                                            kVanishTol))
    return false;
  const auto b = try_amplitude_at(report, u);
  if (!b) return false;
  return std::abs(cond) < kResidualTol * (1.0 + std::abs(*b));
}

std::vector<OptimizationSolution> solve(const numerics::PartialFunction& cond,
                                        const AmplitudeCurve& report,
                                        const numerics::ScanGrid& grid, Condition which) {
  std::vector<OptimizationSolution> out;
  for (double u : numerics::find_roots(cond, grid, kRootTol)) {
    // The Mittag-Leffler curve is flat to first order at u = 0 for every series.
    if (which == Condition::MinDerivative && report.kind == TransformKind::MittagLeffler &&
        std::abs(u) < 1e-6)
      continue;
    const auto c = cond(u);
    if (!c || !accept_root(report, u, *c)) continue;
    out.push_back({u, amplitude_at(report, u), which, report.order});
  }
  if (!out.empty()) {
    sort_solutions(out);
    return out;
  }

  // No exact root: report the grid point of smallest |condition|.
  std::vector<std::optional<double>> mag(static_cast<std::size_t>(grid.points()));
  int best = -1;
  for (int i = 0; i < grid.points(); ++i) {
    const auto c = cond(grid.at(i));
    if (!c || !try_amplitude_at(report, grid.at(i))) continue;
    mag[i] = std::abs(*c);
    if (best < 0 || *mag[i] < *mag[best]) best = i;
  }
  if (best < 0) return out;

  const double limit = 2.0 * *mag[best];
  double lo_b = std::numeric_limits<double>::infinity();
  double hi_b = -lo_b;
  auto take = [&](int i) {
    const double b = amplitude_at(report, grid.at(i));
    lo_b = std::min(lo_b, b);
    hi_b = std::max(hi_b, b);
  };
  take(best);
  for (int i = best - 1; i >= 0 && mag[i] && *mag[i] <= limit; --i) take(i);
  for (int i = best + 1; i < grid.points() && mag[i] && *mag[i] <= limit; ++i) take(i);

  const double u = grid.at(best);
  out.push_back({u, amplitude_at(report, u), which, report.order, true, 0.5 * (hi_b - lo_b)});
  return out;
}

// The ridge cost carries round-off from its numerical derivative, so near a flat
// minimum the golden-section result wanders with the starting bracket. A root of
// the fixed-step slope of F is the same point for every grid spacing.
double polish_stationary(const numerics::PartialFunction& cost, double u,
                         const numerics::ScanGrid& grid) {
  constexpr double delta = 1e-3;
  numerics::PartialFunction slope = [&](double v) -> std::optional<double> {
    const auto a = cost(v + delta);
    const auto b = cost(v - delta);
    if (!a || !b) return std::nullopt;
    return (*a - *b) / (2.0 * delta);
  };
  const double lo = std::max(grid.lo(), u - 2.0 * grid.step());
  const double hi = std::min(grid.hi(), u + 2.0 * grid.step());
  const auto s_lo = slope(lo);
  const auto s_hi = slope(hi);
  if (!s_lo || !s_hi || !(*s_lo < 0.0 && *s_hi > 0.0)) return u;
  return numerics::bisect(slope, {lo, hi, *s_lo, *s_hi}, 1e-12).value_or(u);
}

}  // namespace

TruncatedSeries working_series(const TruncatedSeries& s, int order, Representation r) {
  const TruncatedSeries t = s.truncated(order);
  return r == Representation::Reciprocal ? series::reciprocal(t) : t;
}

double working_beta(double beta, Representation r) noexcept {
  return r == Representation::Reciprocal ? -beta : beta;
}

double amplitude_at(const AmplitudeCurve& curve, double u) {
  try {
    const TruncatedSeries w = working_series(curve.source, curve.order, curve.representation);
    const double beta = working_beta(curve.beta, curve.representation);
    const auto t = transforms::transform_coefficients(w, curve.kind, u);
    const auto root = approximant::fit_iterated_root(t, beta);
    const double b = approximant::marginal_amplitude(root).value *
                     transforms::amplitude_factor(curve.kind, beta, u);
    const double value = curve.representation == Representation::Reciprocal ? 1.0 / b : b;
    if (!std::isfinite(value)) throw OverflowError("amplitude not finite");
    return value;
  } catch (const UndefinedError&) {
    throw;
  } catch (const Error& e) {
    throw UndefinedError(std::string("amplitude undefined: ") + e.what());
  }
}

std::optional<double> try_amplitude_at(const AmplitudeCurve& curve, double u) {
  try {
    return amplitude_at(curve, u);
  } catch (const UndefinedError&) {
    return std::nullopt;
  }
}

double derivative_step(const numerics::ScanGrid& grid) noexcept {
  return 1e-5 * (grid.hi() - grid.lo());
}

std::vector<OptimizationSolution> solve_min_difference(const TruncatedSeries& s,
                                                       TransformKind kind, double beta, int k,
                                                       const numerics::ScanGrid& grid,
                                                       Representation r) {
  if (k < 0 || k + 1 > s.order())
    throw std::invalid_argument("solve_min_difference: need 0 <= k < s.order()");
  const AmplitudeCurve lower{s, kind, beta, k, r};
  const AmplitudeCurve upper{s, kind, beta, k + 1, r};
  numerics::PartialFunction diff = [&](double u) -> std::optional<double> {
    const auto a = try_amplitude_at(upper, u);
    if (!a) return std::nullopt;
    const auto b = try_amplitude_at(lower, u);
    if (!b) return std::nullopt;
    return *a - *b;
  };
  return solve(diff, upper, grid, Condition::MinDifference);
}

std::vector<OptimizationSolution> solve_min_derivative(const TruncatedSeries& s,
                                                       TransformKind kind, double beta, int k,
                                                       const numerics::ScanGrid& grid,
                                                       Representation r) {
  if (k < 0 || k > s.order())
    throw std::invalid_argument("solve_min_derivative: need 0 <= k <= s.order()");
  const AmplitudeCurve curve{s, kind, beta, k, r};
  const auto f = curve_fn(curve);
  const double h = derivative_step(grid);
  numerics::PartialFunction der = [&](double u) -> std::optional<double> {
    try {
      return numerics::derivative(f, u, h);
    } catch (const UndefinedError&) {
      return std::nullopt;
    }
  };
  return solve(der, curve, grid, Condition::MinDerivative);
}

std::optional<double> ridge_cost(const TruncatedSeries& s, TransformKind kind, double beta,
                                 int k, double u, double lambda, double h, Representation r) {
  const AmplitudeCurve lower{s, kind, beta, k, r};
  const AmplitudeCurve upper{s, kind, beta, k + 1, r};
  numerics::PartialFunction summed = [&](double v) -> std::optional<double> {
    const auto b = try_amplitude_at(lower, v);
    if (b && r == Representation::Reciprocal) return 1.0 / *b;
    return b;
  };
  const auto a0 = try_amplitude_at(upper, u);
  const auto b = summed(u);
  if (!a0 || !b) return std::nullopt;
  const double a = r == Representation::Reciprocal ? 1.0 / *a0 : *a0;
  double d;
  try {
    d = numerics::derivative(summed, u, h);
  } catch (const UndefinedError&) {
    return std::nullopt;
  }
  const double du = u - transforms::borel_point(kind);
  return lambda * (a - *b) * (a - *b) + (1.0 - lambda) * d * d + 0.5 * du * du;
}

OptimizationSolution ridge_minimize(const TruncatedSeries& s, TransformKind kind, double beta,
                                    int k, const numerics::ScanGrid& grid, double lambda,
                                    Representation r) {
  if (k < 0 || k + 1 > s.order())
    throw std::invalid_argument("ridge_minimize: need 0 <= k < s.order()");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("ridge_minimize: lambda must lie in [0, 1]");
  const double h = derivative_step(grid);
  numerics::PartialFunction cost = [&](double u) {
    return ridge_cost(s, kind, beta, k, u, lambda, h, r);
  };
  const double u = polish_stationary(cost, numerics::minimize_scalar(cost, grid, 1e-9), grid);
  const AmplitudeCurve upper{s, kind, beta, k + 1, r};
  return {u, amplitude_at(upper, u), Condition::RidgeMinimum, k + 1};
}

void sort_solutions(std::vector<OptimizationSolution>& solutions) {
  std::sort(solutions.begin(), solutions.end(),
            [](const auto& a, const auto& b) { return a.u > b.u; });
  std::vector<OptimizationSolution> out;
  for (const auto& s : solutions) {
    if (!out.empty() && std::abs(out.back().u - s.u) < 1e-6) continue;
    out.push_back(s);
  }
  solutions = std::move(out);
}

}  // namespace optimizer
}  // namespace resum
