#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace resum {

/// Truncated power series a_0 + a_1 x + ... + a_k x^k.
class TruncatedSeries {
public:
  TruncatedSeries() : coeffs_{0.0} {}
  explicit TruncatedSeries(std::vector<double> coeffs);
  TruncatedSeries(std::initializer_list<double> coeffs)
      : TruncatedSeries(std::vector<double>(coeffs)) {}

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  /// Coefficient n, or zero above the truncation order.
  double coeff_or_zero(int n) const noexcept;

  /// First order+1 coefficients (order may not exceed this->order()).
  TruncatedSeries truncated(int order) const;
  /// Zero-padded or truncated copy of the given order.
  TruncatedSeries resized(int order) const;

  TruncatedSeries scaled(double c) const;
  double evaluate(double x) const noexcept;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  std::vector<double> coeffs_;
};

/// Large-variable behaviour f(x) ~ B x^beta.
struct TargetAsymptotics {
  double beta;
  std::optional<double> exact_amplitude;
};

namespace series {

/// c_n = sum_m s_m t_{n-m} for n <= order; requires order <= s.order() + t.order().
TruncatedSeries cauchy_product(const TruncatedSeries& s, const TruncatedSeries& t,
                               int order);

/// Order-(k-1) truncation of f'/f. Throws ZeroLeadingCoefficientError when a_0 = 0.
TruncatedSeries diff_log(const TruncatedSeries& s);

/// Series of s(f_c x / (1 + x)) in x, truncated at s.order().
TruncatedSeries mobius_substitute(const TruncatedSeries& s, double f_c);

/// h^p through the given order, for h_0 > 0 (any real p) or integer p.
/// Throws ComplexValueError when h_0 <= 0 under a non-integer power and
/// ZeroLeadingCoefficientError when h_0 = 0.
TruncatedSeries power(const TruncatedSeries& h, double p, int order);

/// 1/s through s.order(). Throws ZeroLeadingCoefficientError when a_0 = 0.
TruncatedSeries reciprocal(const TruncatedSeries& s);

/// s(g(x)) for g_0 = 0, by Horner nesting of truncated products.
TruncatedSeries compose(const TruncatedSeries& s, const TruncatedSeries& g);

TruncatedSeries derivative(const TruncatedSeries& s);

/// Term-by-term antiderivative with zero constant, order s.order() + 1.
TruncatedSeries integrate(const TruncatedSeries& s);

/// exp(s) through s.order().
TruncatedSeries exp(const TruncatedSeries& s);

}  // namespace series
}  // namespace resum
