#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace resum::numerics {

/// Scalar function that may be undefined at isolated points.
using PartialFunction = std::function<std::optional<double>(double)>;

/// Sign-changing interval.
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

/// Uniform scan grid over [lo, hi].
class ScanGrid {
public:
  ScanGrid(double lo, double hi, int points);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  int points() const noexcept { return points_; }
  double step() const noexcept { return (hi_ - lo_) / (points_ - 1); }
  double at(int i) const noexcept;
  bool contains(double u) const noexcept { return u >= lo_ && u <= hi_; }

  /// Same spacing restricted to [lo, hi]; nullopt when fewer than 2 points remain.
  std::optional<ScanGrid> clipped(double lo, double hi) const;

  /// Parses "lo:hi:points"; throws std::invalid_argument.
  static ScanGrid parse(const std::string& text);

private:
  double lo_;
  double hi_;
  int points_;
};

/// Default control-parameter grid [-8, 3] x 2201.
ScanGrid default_grid();

/// True when x lies within tol of 0, -1, -2, ...
bool near_nonpositive_integer(double x, double tol);

/// Gamma function. Throws PoleError within 1e-12 of a non-positive
/// integer and OverflowError when the value is not representable.
double gamma(double x);

/// All sign changes of f on the grid, refined by bisection to width tol and
/// returned in ascending order. Undefined points split the scan; roots closer
/// than 1e-6 are merged.
std::vector<double> find_roots(const PartialFunction& f, const ScanGrid& grid,
                               double tol);

/// Refine a bracket by bisection. Returns std::nullopt when f becomes
/// undefined inside the bracket.
std::optional<double> bisect(const PartialFunction& f, Bracket b, double tol);

/// Location of the global minimum of f over the grid, polished with a
/// golden-section/Brent search inside the neighbouring cells.
/// Throws NoDefinedPointError if f is undefined on every grid point.
double minimize_scalar(const PartialFunction& f, const ScanGrid& grid,
                       double tol);

/// Central difference with one Richardson step; exact through O(h^4).
/// Throws UndefinedError if f is undefined at a stencil point.
double derivative(const PartialFunction& f, double u, double h);

struct QuadratureNode {
  double node;
  double weight;
};

/// Gauss-Laguerre rule for weight t^alpha e^{-t} on [0, inf), 1 <= order <= 128.
std::vector<QuadratureNode> gauss_laguerre_nodes(int order, double alpha = 0.0);

}  // namespace resum::numerics
