#include "resum/numerics.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include "resum/errors.hpp"

namespace resum::numerics {

ScanGrid::ScanGrid(double lo, double hi, int points)
    : lo_(lo), hi_(hi), points_(points) {
  if (!(lo < hi)) throw std::invalid_argument("ScanGrid: lo must be < hi");
  if (points < 2) throw std::invalid_argument("ScanGrid: need at least 2 points");
}

std::optional<ScanGrid> ScanGrid::clipped(double lo, double hi) const {
  lo = std::max(lo, lo_);
  hi = std::min(hi, hi_);
  if (!(lo < hi)) return std::nullopt;
  const int n = static_cast<int>(std::ceil((hi - lo) / step() - 1e-9)) + 1;
  return ScanGrid(lo, hi, std::max(n, 2));
}

double ScanGrid::at(int i) const noexcept {
  if (i == points_ - 1) return hi_;
  return lo_ + step() * i;
}

ScanGrid ScanGrid::parse(const std::string& text) {
  std::istringstream in(text);
  std::string lo, hi, pts;
  if (!std::getline(in, lo, ':') || !std::getline(in, hi, ':') ||
      !std::getline(in, pts))
    throw std::invalid_argument("grid must be lo:hi:points, got '" + text + "'");
  std::size_t used = 0;
  const double l = std::stod(lo, &used);
  if (used != lo.size()) throw std::invalid_argument("bad grid lower bound");
  const double h = std::stod(hi, &used);
  if (used != hi.size()) throw std::invalid_argument("bad grid upper bound");
  const int n = std::stoi(pts, &used);
  if (used != pts.size()) throw std::invalid_argument("bad grid point count");
  return ScanGrid(l, h, n);
}

ScanGrid default_grid() { return ScanGrid(-8.0, 3.0, 2201); }

bool near_nonpositive_integer(double x, double tol) {
  if (x > tol) return false;
  return std::abs(x - std::round(x)) <= tol;
}

double gamma(double x) {
  if (std::isnan(x)) throw DomainError("gamma: NaN argument");
  if (near_nonpositive_integer(x, 1e-12)) {
    std::ostringstream msg;
    msg << "gamma: pole at x=" << x;
    throw PoleError(msg.str());
  }
  // libm tgamma applies the reflection formula for negative arguments.
  const double g = std::tgamma(x);
  if (!std::isfinite(g)) {
    std::ostringstream msg;
    msg << "gamma: overflow at x=" << x;
    throw OverflowError(msg.str());
  }
  return g;
}

std::optional<double> bisect(const PartialFunction& f, Bracket b, double tol) {
  double lo = b.lo, hi = b.hi, f_lo = b.f_lo;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const auto fm = f(mid);
    if (!fm) return std::nullopt;
    if (*fm == 0.0) return mid;
    if ((*fm < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = *fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> find_roots(const PartialFunction& f, const ScanGrid& grid,
                               double tol) {
  const int n = grid.points();
  std::vector<std::optional<double>> values(n);
  for (int i = 0; i < n; ++i) {
    auto v = f(grid.at(i));
    if (v && !std::isfinite(*v)) v.reset();
    values[i] = v;
  }

  std::vector<double> roots;
  for (int i = 0; i < n; ++i) {
    if (values[i] && *values[i] == 0.0) {
      // a run of zeros is a flat stretch, not a root
      const bool flat = (i > 0 && values[i - 1] && *values[i - 1] == 0.0) ||
                        (i + 1 < n && values[i + 1] && *values[i + 1] == 0.0);
      if (!flat) roots.push_back(grid.at(i));
      continue;
    }
    if (i + 1 >= n || !values[i] || !values[i + 1]) continue;
    const double a = *values[i], b = *values[i + 1];
    if (b == 0.0 || (a < 0.0) == (b < 0.0)) continue;
    if (auto r = bisect(f, {grid.at(i), grid.at(i + 1), a, b}, tol)) {
      roots.push_back(*r);
    }
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || r - unique.back() > 1e-6) unique.push_back(r);
  }
  return unique;
}

namespace {

double value_or_inf(const PartialFunction& f, double u) {
  const auto v = f(u);
  if (!v || !std::isfinite(*v)) return std::numeric_limits<double>::infinity();
  return *v;
}

}  // namespace

double minimize_scalar(const PartialFunction& f, const ScanGrid& grid,
                       double tol) {
  const int n = grid.points();
  int best = -1;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double v = value_or_inf(f, grid.at(i));
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best < 0) throw NoDefinedPointError("minimize_scalar: f undefined on the whole grid");

  // Golden-section search over the two cells adjacent to the best grid point.
  double a = grid.at(std::max(best - 1, 0));
  double b = grid.at(std::min(best + 1, n - 1));
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = value_or_inf(f, c);
  double fd = value_or_inf(f, d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = value_or_inf(f, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = value_or_inf(f, d);
    }
  }
  const double polished = 0.5 * (a + b);
  // The search never returns something worse than the best grid point.
  if (value_or_inf(f, polished) <= best_value) return polished;
  return grid.at(best);
}

double derivative(const PartialFunction& f, double u, double h) {
  auto eval = [&](double x) {
    const auto v = f(x);
    if (!v || !std::isfinite(*v)) throw UndefinedError("derivative: f undefined near u");
    return *v;
  };
  const double d_h = (eval(u + h) - eval(u - h)) / (2.0 * h);
  const double d_half = (eval(u + 0.5 * h) - eval(u - 0.5 * h)) / h;
  return (4.0 * d_half - d_h) / 3.0;
}

std::vector<QuadratureNode> gauss_laguerre_nodes(int order, double alpha) {
  if (order < 1 || order > 128)
    throw std::invalid_argument("gauss_laguerre_nodes: order must be in [1, 128]");
  if (!(alpha > -1.0))
    throw DomainError("gauss_laguerre_nodes: alpha must exceed -1");

  gsl_set_error_handler_off();
  std::unique_ptr<gsl_integration_fixed_workspace,
                  decltype(&gsl_integration_fixed_free)>
      ws(gsl_integration_fixed_alloc(gsl_integration_fixed_laguerre,
                                     static_cast<std::size_t>(order), 0.0, 1.0,
                                     alpha, 0.0),
         &gsl_integration_fixed_free);
  if (!ws) throw Error("gauss_laguerre_nodes: GSL allocation failed");

  const double* nodes = gsl_integration_fixed_nodes(ws.get());
  const double* weights = gsl_integration_fixed_weights(ws.get());
  std::vector<QuadratureNode> rule(order);
  for (int i = 0; i < order; ++i) rule[i] = {nodes[i], weights[i]};
  return rule;
}

}  // namespace resum::numerics
