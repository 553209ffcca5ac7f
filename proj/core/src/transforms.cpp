#include "resum/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "resum/approximant.hpp"
#include "resum/errors.hpp"
#include "resum/numerics.hpp"

namespace resum {

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::BorelLeroy: return "borel-leroy";
    case TransformKind::MittagLeffler: return "mittag-leffler";
    case TransformKind::FractionalDerivative: return "frac-derivative";
    case TransformKind::FractionalIntegral: return "frac-integral";
  }
  return "unknown";
}

TransformKind parse_kind(std::string_view name) {
  for (TransformKind k : kAllKinds) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown transform kind '" + std::string(name) + "'");
}

namespace transforms {
namespace {

constexpr double kPoleTol = 1e-10;

double checked_gamma(double arg, int index) {
  if (numerics::near_nonpositive_integer(arg, kPoleTol)) {
    std::ostringstream msg;
    msg << "transform pole: gamma argument " << arg << " at n=" << index;
    throw PoleError(msg.str(), index);
  }
  return numerics::gamma(arg);
}

}  // namespace

TransformedSeries transform_coefficients(const TruncatedSeries& s, TransformKind kind,
                                         double u) {
  std::vector<double> b(static_cast<std::size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n) {
    const double a = s[n];
    switch (kind) {
      case TransformKind::BorelLeroy:
        b[n] = a / checked_gamma(n + u + 1.0, n);
        break;
      case TransformKind::MittagLeffler:
        b[n] = a / checked_gamma(n * u + 1.0, n);
        break;
      case TransformKind::FractionalDerivative: {
        const double nf = numerics::gamma(n + 1.0);
        b[n] = a * checked_gamma(n - u + 1.0, n) / (nf * nf);
        break;
      }
      case TransformKind::FractionalIntegral:
        b[n] = a * std::pow(n + 1.0, u) / numerics::gamma(n + 1.0);
        break;
    }
    if (!std::isfinite(b[n])) throw OverflowError("transform_coefficients: non-finite b_n");
  }
  return {TruncatedSeries(std::move(b)), u, kind};
}

double borel_point(TransformKind kind) noexcept {
  return kind == TransformKind::MittagLeffler ? 1.0 : 0.0;
}

double amplitude_factor(TransformKind kind, double beta, double u) {
  switch (kind) {
    case TransformKind::BorelLeroy:
      return checked_gamma(beta + u + 1.0, -1);
    case TransformKind::MittagLeffler:
      return checked_gamma(beta * u + 1.0, -1);
    case TransformKind::FractionalDerivative: {
      const double g = checked_gamma(beta + 1.0, -1);
      return g * g / checked_gamma(beta - u + 1.0, -1);
    }
    case TransformKind::FractionalIntegral:
      if (!(beta > -1.0)) throw DomainError("amplitude_factor: fractional integral needs beta > -1");
      return checked_gamma(beta + 1.0, -1) / std::pow(beta + 1.0, u);
  }
  throw std::logic_error("amplitude_factor: bad kind");
}

bool amplitude_factor_vanishes(TransformKind kind, double beta, double u, double tol) {
  return kind == TransformKind::FractionalDerivative &&
         numerics::near_nonpositive_integer(beta - u + 1.0, tol);
}

ParameterDomain parameter_domain(TransformKind kind, double beta, int order) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (kind) {
    case TransformKind::BorelLeroy:
      return {std::max(-1.0, -beta - 1.0), inf, false, false};
    case TransformKind::MittagLeffler:
      return {0.0, beta < 0.0 ? -1.0 / beta : inf, false, false};
    case TransformKind::FractionalDerivative:
      return {0.0, std::min(order > 0 ? 1.0 : inf, beta + 1.0), true, false};
    case TransformKind::FractionalIntegral:
      if (!(beta > -1.0)) return {0.0, 0.0, false, false};
      return {-inf, 0.0, false, true};
  }
  throw std::logic_error("parameter_domain: bad kind");
}

double evaluate_resummed(const TruncatedSeries& s, TransformKind kind, double beta,
                         double u, double x, int quad_order) {
  if (kind != TransformKind::BorelLeroy && kind != TransformKind::MittagLeffler)
    throw UnsupportedKindError("evaluate_resummed: only borel-leroy and mittag-leffler");
  if (x < 0.0) throw DomainError("evaluate_resummed: x must be non-negative");

  const auto t = transform_coefficients(s, kind, u);
  const auto root = approximant::fit_iterated_root(t, beta);

  double acc = 0.0;
  if (kind == TransformKind::BorelLeroy) {
    if (!(u > -1.0)) throw DomainError("evaluate_resummed: borel-leroy needs u > -1");
    // Generalized Laguerre rule carries the t^u weight exactly.
    for (const auto& q : numerics::gauss_laguerre_nodes(quad_order, u)) {
      acc += q.weight * approximant::evaluate_root(root, x * q.node);
    }
  } else {
    for (const auto& q : numerics::gauss_laguerre_nodes(quad_order)) {
      acc += q.weight * approximant::evaluate_root(root, x * std::pow(q.node, u));
    }
  }
  return acc;
}

}  // namespace transforms
}  // namespace resum
