#pragma once

#include <vector>

#include "resum/series.hpp"
#include "resum/transforms.hpp"

namespace resum {

/// Self-similar iterated root
///   scale * ((((1 + A_1 x)^2 + A_2 x^2)^{3/2} + A_3 x^3)^{4/3} + ... + A_k x^k)^{beta/k}
/// For k = 1 the form is scale * (1 + A_1 x)^beta; for k = 0 it is the constant scale.
struct IteratedRootApproximant {
  /// Extended precision: the high orders of the expansion cancel heavily.
  std::vector<long double> A;
  double beta = 0.0;
  double scale = 1.0;

  int order() const noexcept { return static_cast<int>(A.size()); }
};

/// Leading coefficient C of scale * x^beta behaviour at infinity.
struct MarginalAmplitude {
  double value;
};

namespace approximant {

/// Accuracy-through-order fit: A_j is fixed from the order-j Taylor coefficient,
/// which is affine in A_j once A_1..A_{j-1} are known.
/// Throws ZeroLeadingCoefficientError (b_0 = 0), DegenerateOrderError (the
/// affine slope vanishes) or ComplexValueError (an intermediate base of a
/// non-integer power has a non-positive constant term).
IteratedRootApproximant fit_iterated_root(const TruncatedSeries& b, double beta);
IteratedRootApproximant fit_iterated_root(const TransformedSeries& t, double beta);

/// Taylor expansion of the approximant through the given order.
TruncatedSeries taylor_expansion(const IteratedRootApproximant& r, int order);

/// Value at x >= 0; ComplexValueError when a non-integer power meets a
/// non-positive base.
double evaluate_root(const IteratedRootApproximant& r, double x);

/// C = scale * P_k^{beta/k}, P_2 = A_1^2 + A_2, P_{j+1} = P_j^{(j+1)/j} + A_{j+1}.
MarginalAmplitude marginal_amplitude(const IteratedRootApproximant& r);

}  // namespace approximant
}  // namespace resum
