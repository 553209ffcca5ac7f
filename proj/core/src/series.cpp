#include "resum/series.hpp"

#include <cmath>
#include <stdexcept>

#include "resum/errors.hpp"

namespace resum {

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: need at least a_0");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
  }
}

double TruncatedSeries::coeff_or_zero(int n) const noexcept {
  if (n < 0 || n > order()) return 0.0;
  return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0 || order > this->order())
    throw std::invalid_argument("TruncatedSeries::truncated: order out of range");
  return TruncatedSeries(std::vector<double>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::resized(int order) const {
  if (order < 0) throw std::invalid_argument("TruncatedSeries::resized: negative order");
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  for (int n = 0; n <= order && n <= this->order(); ++n) c[n] = coeffs_[n];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::scaled(double c) const {
  std::vector<double> out(coeffs_);
  for (double& v : out) v *= c;
  return TruncatedSeries(std::move(out));
}

double TruncatedSeries::evaluate(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace series {

TruncatedSeries cauchy_product(const TruncatedSeries& s, const TruncatedSeries& t,
                               int order) {
  if (order < 0 || order > s.order() + t.order())
    throw std::invalid_argument("cauchy_product: order exceeds s.order() + t.order()");
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  for (int n = 0; n <= order; ++n) {
    double acc = 0.0;
    for (int m = 0; m <= n; ++m) acc += s.coeff_or_zero(m) * t.coeff_or_zero(n - m);
    c[n] = acc;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries diff_log(const TruncatedSeries& s) {
  const double a0 = s[0];
  if (a0 == 0.0) throw ZeroLeadingCoefficientError("diff_log: a_0 = 0");
  if (s.order() < 1) throw std::invalid_argument("diff_log: need order >= 1");
  const int k = s.order();
  std::vector<double> c(static_cast<std::size_t>(k), 0.0);
  // f' = f L solved order by order.
  for (int n = 0; n < k; ++n) {
    double acc = (n + 1) * s[n + 1];
    for (int m = 1; m <= n; ++m) acc -= s[m] * c[n - m];
    c[n] = acc / a0;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& s, const TruncatedSeries& g) {
  if (g[0] != 0.0) throw std::invalid_argument("compose: inner series must vanish at 0");
  const int k = s.order();
  const TruncatedSeries inner = g.resized(k);
  TruncatedSeries acc({s[k]});
  for (int n = k - 1; n >= 0; --n) {
    TruncatedSeries prod = cauchy_product(acc.resized(k), inner, k);
    std::vector<double> c(prod.coeffs().begin(), prod.coeffs().end());
    c[0] += s[n];
    acc = TruncatedSeries(std::move(c));
  }
  return acc.resized(k);
}

TruncatedSeries mobius_substitute(const TruncatedSeries& s, double f_c) {
  if (!(f_c > 0.0)) throw DomainError("mobius_substitute: f_c must be positive");
  const int k = s.order();
  if (k == 0) return s;
  // f_c x / (1 + x) = f_c (x - x^2 + x^3 - ...)
  std::vector<double> w(static_cast<std::size_t>(k) + 1, 0.0);
  for (int n = 1; n <= k; ++n) w[n] = (n % 2 == 1 ? f_c : -f_c);
  return compose(s, TruncatedSeries(std::move(w)));
}

TruncatedSeries power(const TruncatedSeries& h, double p, int order) {
  const double h0 = h[0];
  const bool integer_power = p == std::round(p);
  if (h0 == 0.0) throw ZeroLeadingCoefficientError("power: h_0 = 0");
  if (h0 < 0.0 && !integer_power) throw ComplexValueError("power: negative base, non-integer exponent");
  std::vector<double> g(static_cast<std::size_t>(order) + 1, 0.0);
  g[0] = std::pow(h0, p);
  // J.C.P. Miller recurrence for g = h^p.
  for (int n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (int m = 1; m <= n; ++m) acc += (p * m - (n - m)) * h.coeff_or_zero(m) * g[n - m];
    g[n] = acc / (n * h0);
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
  const double a0 = s[0];
  if (a0 == 0.0) throw ZeroLeadingCoefficientError("reciprocal: a_0 = 0");
  std::vector<double> r(static_cast<std::size_t>(s.order()) + 1, 0.0);
  r[0] = 1.0 / a0;
  for (int n = 1; n <= s.order(); ++n) {
    double acc = 0.0;
    for (int m = 1; m <= n; ++m) acc += s[m] * r[n - m];
    r[n] = -acc / a0;
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries derivative(const TruncatedSeries& s) {
  if (s.order() == 0) return TruncatedSeries({0.0});
  std::vector<double> c(static_cast<std::size_t>(s.order()));
  for (int n = 1; n <= s.order(); ++n) c[n - 1] = n * s[n];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate(const TruncatedSeries& s) {
  std::vector<double> c(static_cast<std::size_t>(s.order()) + 2, 0.0);
  for (int n = 0; n <= s.order(); ++n) c[n + 1] = s[n] / (n + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries exp(const TruncatedSeries& s) {
  const int k = s.order();
  std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = std::exp(s[0]);
  // E' = s' E
  for (int n = 1; n <= k; ++n) {
    double acc = 0.0;
    for (int m = 1; m <= n; ++m) acc += m * s[m] * e[n - m];
    e[n] = acc / n;
  }
  return TruncatedSeries(std::move(e));
}

}  // namespace series
}  // namespace resum
