#pragma once

#include <array>
#include <string>
#include <string_view>

#include "resum/series.hpp"

namespace resum {

enum class TransformKind { BorelLeroy, MittagLeffler, FractionalDerivative, FractionalIntegral };

inline constexpr std::array<TransformKind, 4> kAllKinds = {
    TransformKind::MittagLeffler, TransformKind::BorelLeroy,
    TransformKind::FractionalDerivative, TransformKind::FractionalIntegral};

/// CLI spelling: borel-leroy, mittag-leffler, frac-derivative, frac-integral.
std::string_view to_string(TransformKind kind);
TransformKind parse_kind(std::string_view name);

/// Coefficients b_n(u) of a Borel-type transform.
struct TransformedSeries {
  TruncatedSeries b;
  double u;
  TransformKind kind;

  int order() const noexcept { return b.order(); }
};

namespace transforms {

/// b_n(u) for every n of s. Throws PoleError naming the offending index when a
/// gamma argument falls within 1e-10 of a non-positive integer.
TransformedSeries transform_coefficients(const TruncatedSeries& s, TransformKind kind,
                                         double u);

/// Control parameter at which the transform reduces to the plain Borel one.
double borel_point(TransformKind kind) noexcept;

/// Factor relating the marginal amplitude of the transformed sum to the
/// amplitude of the original function:
///   BorelLeroy           Gamma(beta + u + 1)
///   MittagLeffler        Gamma(beta u + 1)
///   FractionalDerivative Gamma(beta + 1)^2 / Gamma(beta - u + 1)
///   FractionalIntegral   Gamma(beta + 1) / (beta + 1)^u
double amplitude_factor(TransformKind kind, double beta, double u);

/// True when the factor vanishes identically because 1/Gamma sits on a zero
/// (fractional-derivative kind with beta - u + 1 near a non-positive integer).
bool amplitude_factor_vanishes(TransformKind kind, double beta, double u, double tol);

/// Range of u on which every gamma argument of the transform (for orders
/// 0..order) and of the amplitude factor stays positive.
/// The fractional integral is restricted to integration orders u <= 0 and the
/// fractional derivative to u >= 0.
struct ParameterDomain {
  double lo;
  double hi;
  bool lo_closed;
  bool hi_closed;
  bool empty() const noexcept { return !(lo < hi); }
};
ParameterDomain parameter_domain(TransformKind kind, double beta, int order);

/// Finite-x value of the resummed series (Borel-Leroy and Mittag-Leffler only):
///   BorelLeroy:    int_0^inf B*(x t, u) t^u e^{-t} dt
///   MittagLeffler: int_0^inf B*(x t^u, u) e^{-t} dt
/// evaluated by Gauss-Laguerre quadrature of the given order.
/// Throws UnsupportedKindError for the fractional kinds.
double evaluate_resummed(const TruncatedSeries& s, TransformKind kind, double beta,
                         double u, double x, int quad_order = 64);

}  // namespace transforms
}  // namespace resum
