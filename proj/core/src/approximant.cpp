#include "resum/approximant.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "resum/errors.hpp"

namespace resum::approximant {
namespace {

bool is_integer(long double p) { return p == std::round(p); }

long double real_pow(long double base, long double p) {
  if (base < 0.0L && !is_integer(p)) {
    std::ostringstream msg;
    msg << "iterated root: non-integer power " << static_cast<double>(p) << " of negative base "
        << static_cast<double>(base);
    throw ComplexValueError(msg.str());
  }
  if (base == 0.0L && p <= 0.0L) {
    throw ComplexValueError("iterated root: zero base, non-positive power");
  }
  return std::pow(base, p);
}

using Wide = std::vector<long double>;

// s^p for s_0 = 1, by the Miller recurrence
Wide wide_power(const Wide& s, long double p, int order) {
  Wide c(static_cast<std::size_t>(order) + 1, 0.0L);
  c[0] = 1.0L;
  for (int n = 1; n <= order; ++n) {
    long double acc = 0.0L;
    for (int k = 1; k <= n && k < static_cast<int>(s.size()); ++k) {
      acc += ((p + 1.0L) * k - n) * s[k] * c[n - k];
    }
    c[n] = acc / n;
  }
  return c;
}

// Nested expansion with the k-term structure fixed by A.size().
Wide expand_normalized(const Wide& A, long double beta, int order) {
  const int k = static_cast<int>(A.size());
  if (k == 0) {
    Wide one(static_cast<std::size_t>(order) + 1, 0.0L);
    one[0] = 1.0L;
    return one;
  }
  Wide level = wide_power({1.0L, A[0]}, k == 1 ? beta : 2.0L, order);
  if (k > 1) {
    if (order >= 2) level[2] += A[1];
    for (int j = 2; j < k; ++j) {
      level = wide_power(level, static_cast<long double>(j + 1) / j, order);
      if (j + 1 <= order) level[j + 1] += A[j];
    }
    level = wide_power(level, beta / k, order);
  }
  return level;
}

}  // namespace

IteratedRootApproximant fit_iterated_root(const TruncatedSeries& b, double beta) {
  const double b0 = b[0];
  if (b0 == 0.0) throw ZeroLeadingCoefficientError("fit_iterated_root: b_0 = 0");
  const int k = b.order();

  IteratedRootApproximant r;
  r.beta = beta;
  r.scale = b0;
  r.A.assign(static_cast<std::size_t>(k), 0.0L);

  for (int j = 1; j <= k; ++j) {
    const long double target = static_cast<long double>(b[j]) / b0;
    r.A[j - 1] = 0.0L;
    const long double at_zero = expand_normalized(r.A, beta, j)[j];
    r.A[j - 1] = 1.0L;
    const long double at_one = expand_normalized(r.A, beta, j)[j];
    const long double slope = at_one - at_zero;
    if (std::abs(slope) < 1e-14L) {
      // beta = 0 leaves A_j out of order j; fine as long as nothing is left to match
      if (std::abs(target - at_zero) <= 1e-14L * (1.0L + std::abs(target))) {
        r.A[j - 1] = 0.0L;
        continue;
      }
      std::ostringstream msg;
      msg << "fit_iterated_root: A_" << j << " does not enter order " << j;
      throw DegenerateOrderError(msg.str());
    }
    r.A[j - 1] = (target - at_zero) / slope;
    // the two probes cancel when the lower orders are large; correct on the residual
    long double last = std::abs(target - expand_normalized(r.A, beta, j)[j]);
    for (int pass = 0; pass < 8 && last > 0.0L; ++pass) {
      const long double before = r.A[j - 1];
      r.A[j - 1] += (target - expand_normalized(r.A, beta, j)[j]) / slope;
      const long double now = std::abs(target - expand_normalized(r.A, beta, j)[j]);
      if (now >= last) {
        if (now > last) r.A[j - 1] = before;
        break;
      }
      last = now;
    }
  }
  return r;
}

IteratedRootApproximant fit_iterated_root(const TransformedSeries& t, double beta) {
  return fit_iterated_root(t.b, beta);
}

TruncatedSeries taylor_expansion(const IteratedRootApproximant& r, int order) {
  const Wide e = expand_normalized(r.A, r.beta, order);
  std::vector<double> c(e.size());
  for (std::size_t n = 0; n < e.size(); ++n) c[n] = static_cast<double>(r.scale * e[n]);
  return TruncatedSeries(std::move(c));
}

double evaluate_root(const IteratedRootApproximant& r, double x) {
  if (x < 0.0) throw DomainError("evaluate_root: x must be non-negative");
  const int k = r.order();
  if (k == 0 || x == 0.0) return r.scale;
  const long double X = x;
  if (k == 1) return static_cast<double>(r.scale * real_pow(1.0L + r.A[0] * X, r.beta));

  const long double lin = 1.0L + r.A[0] * X;
  long double level = lin * lin + r.A[1] * X * X;
  for (int j = 2; j < k; ++j) {
    level = real_pow(level, static_cast<long double>(j + 1) / j) + r.A[j] * std::pow(X, j + 1);
  }
  return static_cast<double>(r.scale * real_pow(level, static_cast<long double>(r.beta) / k));
}

MarginalAmplitude marginal_amplitude(const IteratedRootApproximant& r) {
  const int k = r.order();
  if (r.beta == 0.0) return {r.scale};
  if (k == 0) throw DegenerateOrderError("marginal_amplitude: constant approximant");
  if (k == 1) return {static_cast<double>(r.scale * real_pow(r.A[0], r.beta))};

  long double p = r.A[0] * r.A[0] + r.A[1];
  for (int j = 2; j < k; ++j) p = real_pow(p, static_cast<long double>(j + 1) / j) + r.A[j];
  return {static_cast<double>(r.scale * real_pow(p, static_cast<long double>(r.beta) / k))};
}

}  // namespace resum::approximant
