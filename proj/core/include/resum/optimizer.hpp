#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "resum/numerics.hpp"
#include "resum/series.hpp"
#include "resum/transforms.hpp"

namespace resum {

/// Which function the transform machinery is applied to.
///
/// Direct sums f itself against x^beta. Reciprocal sums 1/f against
/// x^{-beta} and inverts the resulting amplitude.
enum class Representation { Direct, Reciprocal };

/// Direct whenever the parameter domain of kind is non-empty for beta,
/// Reciprocal otherwise (fractional kinds with beta <= -1).
Representation default_representation(TransformKind kind, double beta, int order);
std::string_view to_string(Representation r);

/// B_k(u) as a callable curve.
struct AmplitudeCurve {
  TruncatedSeries source;
  TransformKind kind;
  double beta;
  int order;
  Representation representation = Representation::Direct;
};

enum class Condition { MinDifference, MinDerivative, BorelPoint, RidgeMinimum };
std::string_view to_string(Condition c);

struct OptimizationSolution {
  double u;
  double amplitude;
  Condition condition;
  int order;
  /// No exact root exists; u minimizes |condition| over the grid instead.
  bool approximate = false;
  /// Half-range of the amplitude across the near-minimal cells (approximate only).
  double width = 0.0;
};

namespace optimizer {

/// Series the transforms act on for this representation, truncated at order.
TruncatedSeries working_series(const TruncatedSeries& s, int order, Representation r);
/// Exponent the iterated root is fitted with for this representation.
double working_beta(double beta, Representation r) noexcept;

/// B_k(u) = C_k(u) * amplitude_factor. Throws UndefinedError when the
/// transform hits a pole or the root turns complex.
double amplitude_at(const AmplitudeCurve& curve, double u);
std::optional<double> try_amplitude_at(const AmplitudeCurve& curve, double u);

/// Step of the numerical derivative used by the minimal-derivative condition.
double derivative_step(const numerics::ScanGrid& grid) noexcept;

/// Roots of B_{k+1}(u) - B_k(u) on the grid, each reported with B_{k+1}(u_j).
/// Falls back to one approximate solution at the minimum of |B_{k+1} - B_k|
/// when there is no sign change. Empty only if B is undefined everywhere.
std::vector<OptimizationSolution> solve_min_difference(
    const TruncatedSeries& s, TransformKind kind, double beta, int k,
    const numerics::ScanGrid& grid, Representation r = Representation::Direct);

/// Roots of dB_k/du on the grid, each reported with B_k(u_j); approximate
/// fallback as for solve_min_difference.
std::vector<OptimizationSolution> solve_min_derivative(
    const TruncatedSeries& s, TransformKind kind, double beta, int k,
    const numerics::ScanGrid& grid, Representation r = Representation::Direct);

/// Cost F(u) = lambda |B_{k+1} - B_k|^2 + (1 - lambda) |dB_k/du|^2 + (u - u_0)^2 / 2,
/// with B the amplitude of the summed function (1/B in the reciprocal representation).
std::optional<double> ridge_cost(const TruncatedSeries& s, TransformKind kind, double beta,
                                 int k, double u, double lambda, double h,
                                 Representation r = Representation::Direct);

/// Global minimizer of the ridge cost over the grid; reports B_{k+1}(u_opt).
/// Throws NoDefinedPointError when F is undefined on every grid point.
OptimizationSolution ridge_minimize(const TruncatedSeries& s, TransformKind kind,
                                    double beta, int k, const numerics::ScanGrid& grid,
                                    double lambda = 0.5,
                                    Representation r = Representation::Direct);

/// Sort by u descending and drop duplicates closer than 1e-6.
void sort_solutions(std::vector<OptimizationSolution>& solutions);

}  // namespace optimizer
}  // namespace resum
