#include <doctest.h>

#include <cmath>
#include <limits>

#include "resum/benchmarks.hpp"
#include "resum/errors.hpp"
#include "resum/optimizer.hpp"
#include "resum/transforms.hpp"

using namespace resum;

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("kind names round trip") {
  for (TransformKind k : kAllKinds) CHECK(parse_kind(to_string(k)) == k);
  CHECK(parse_kind("frac-integral") == TransformKind::FractionalIntegral);
  CHECK_THROWS(parse_kind("laplace"));
}

TEST_CASE("borel points") {
  CHECK(transforms::borel_point(TransformKind::BorelLeroy) == 0.0);
  CHECK(transforms::borel_point(TransformKind::MittagLeffler) == 1.0);
  CHECK(transforms::borel_point(TransformKind::FractionalDerivative) == 0.0);
  CHECK(transforms::borel_point(TransformKind::FractionalIntegral) == 0.0);
}

TEST_CASE("transform_coefficients") {
  const TruncatedSeries s{0.7, -1.3, 2.9, -4.1};
  SUBCASE("borel-leroy at u = 0 is the plain Borel transform") {
    const auto t = transforms::transform_coefficients(s, TransformKind::BorelLeroy, 0.0);
    for (int n = 0; n <= 3; ++n) CHECK(t.b[n] == doctest::Approx(s[n] / factorial(n)));
  }
  SUBCASE("fractional integral at u = 0 is the plain Borel transform") {
    const auto t = transforms::transform_coefficients(s, TransformKind::FractionalIntegral, 0.0);
    for (int n = 0; n <= 3; ++n) CHECK(t.b[n] == doctest::Approx(s[n] / factorial(n)));
  }
  SUBCASE("fractional integral weights") {
    const auto t = transforms::transform_coefficients({1.0, 6.0}, TransformKind::FractionalIntegral,
                                                      2.0);
    CHECK(t.b[0] == doctest::Approx(1.0));
    CHECK(t.b[1] == doctest::Approx(24.0));
  }
  SUBCASE("general u") {
    const double u = 0.37;
    const auto bl = transforms::transform_coefficients(s, TransformKind::BorelLeroy, u);
    const auto ml = transforms::transform_coefficients(s, TransformKind::MittagLeffler, u);
    const auto fd = transforms::transform_coefficients(s, TransformKind::FractionalDerivative, u);
    for (int n = 0; n <= 3; ++n) {
      CHECK(bl.b[n] == doctest::Approx(s[n] / std::tgamma(n + u + 1.0)).epsilon(1e-13));
      CHECK(ml.b[n] == doctest::Approx(s[n] / std::tgamma(n * u + 1.0)).epsilon(1e-13));
      CHECK(fd.b[n] == doctest::Approx(s[n] * std::tgamma(n - u + 1.0) /
                                       (factorial(n) * factorial(n)))
                           .epsilon(1e-13));
    }
    CHECK(bl.u == u);
    CHECK(bl.kind == TransformKind::BorelLeroy);
    CHECK(bl.order() == 3);
  }
}

TEST_CASE("transform poles name the offending index") {
  const TruncatedSeries s{1.0, 1.0, 1.0, 1.0};
  try {
    transforms::transform_coefficients(s, TransformKind::BorelLeroy, -3.0);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(e.index() == 0);
  }
  try {
    transforms::transform_coefficients(s, TransformKind::MittagLeffler, -0.5);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(e.index() == 2);
  }
  CHECK_THROWS_AS(transforms::transform_coefficients(s, TransformKind::FractionalDerivative, 2.0),
                  PoleError);
}

TEST_CASE("all kinds coincide at their borel points") {
  for (const auto& p : benchmarks::registry()) {
    const TruncatedSeries s = p.summed_series();
    const auto ref = transforms::transform_coefficients(s, TransformKind::BorelLeroy, 0.0);
    for (TransformKind k : kAllKinds) {
      const auto t = transforms::transform_coefficients(s, k, transforms::borel_point(k));
      for (int n = 0; n <= s.order(); ++n) {
        INFO(p.id << " " << to_string(k) << " n=" << n);
        CHECK(std::abs(t.b[n] - ref.b[n]) <= 1e-12 * std::abs(ref.b[n]));
      }
    }
  }
}

TEST_CASE("amplitude factors") {
  for (double beta : {-0.5, 1.0 / 3.0, 0.4, 2.0}) {
    const double g = std::tgamma(beta + 1.0);
    for (TransformKind k : kAllKinds) {
      INFO(to_string(k) << " beta=" << beta);
      CHECK(transforms::amplitude_factor(k, beta, transforms::borel_point(k)) ==
            doctest::Approx(g).epsilon(1e-12));
    }
  }
  CHECK(transforms::amplitude_factor(TransformKind::BorelLeroy, 1.0, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
  // mpmath: gamma(4/3) * (4/3)^0.60088
  CHECK(transforms::amplitude_factor(TransformKind::FractionalIntegral, 1.0 / 3.0, -0.60088) ==
        doctest::Approx(1.06148700710011637).epsilon(1e-12));
  CHECK(transforms::amplitude_factor(TransformKind::FractionalDerivative, 0.4, 0.3) ==
        doctest::Approx(std::pow(std::tgamma(1.4), 2) / std::tgamma(1.1)).epsilon(1e-13));
  CHECK(transforms::amplitude_factor(TransformKind::MittagLeffler, -0.5, 0.5) ==
        doctest::Approx(std::tgamma(0.75)).epsilon(1e-13));

  CHECK_THROWS_AS(transforms::amplitude_factor(TransformKind::FractionalIntegral, -1.0, -0.5),
                  DomainError);
  CHECK_THROWS_AS(transforms::amplitude_factor(TransformKind::FractionalIntegral, -1.5, -0.5),
                  DomainError);
  CHECK_THROWS_AS(transforms::amplitude_factor(TransformKind::BorelLeroy, -0.5, -0.5), PoleError);
}

TEST_CASE("mittag-leffler index 1 matches borel-leroy") {
  // u_ML = 1 + v at n = 1 gives a_1 / Gamma(v + 2), the borel-leroy b_1 at u = v
  const TruncatedSeries s{1.0, 2.5, -1.0};
  for (double v : {0.2, 0.9, 2.3}) {
    const auto ml = transforms::transform_coefficients(s, TransformKind::MittagLeffler, 1.0 + v);
    const auto bl = transforms::transform_coefficients(s, TransformKind::BorelLeroy, v);
    CHECK(ml.b[1] == doctest::Approx(bl.b[1]).epsilon(1e-14));
  }
}

TEST_CASE("parameter domains") {
  using transforms::parameter_domain;
  const auto bl = parameter_domain(TransformKind::BorelLeroy, 0.4, 4);
  CHECK(bl.lo == doctest::Approx(-1.0));
  CHECK(std::isinf(bl.hi));
  CHECK(parameter_domain(TransformKind::BorelLeroy, 2.0, 4).lo == doctest::Approx(-1.0));
  CHECK(parameter_domain(TransformKind::BorelLeroy, -1.5, 4).lo == doctest::Approx(0.5));

  const auto ml = parameter_domain(TransformKind::MittagLeffler, -0.5, 3);
  CHECK(ml.lo == 0.0);
  CHECK(ml.hi == doctest::Approx(2.0));
  CHECK(std::isinf(parameter_domain(TransformKind::MittagLeffler, 0.4, 3).hi));

  const auto fd = parameter_domain(TransformKind::FractionalDerivative, -0.5, 3);
  CHECK(fd.lo == 0.0);
  CHECK(fd.lo_closed);
  CHECK(fd.hi == doctest::Approx(0.5));

  const auto fi = parameter_domain(TransformKind::FractionalIntegral, 0.4, 3);
  CHECK(fi.hi == 0.0);
  CHECK(fi.hi_closed);
  CHECK(parameter_domain(TransformKind::FractionalIntegral, -1.0, 3).empty());
  CHECK(parameter_domain(TransformKind::FractionalDerivative, -1.0, 3).empty());
  CHECK_FALSE(parameter_domain(TransformKind::MittagLeffler, -1.0, 3).empty());
}

TEST_CASE("evaluate_resummed") {
  SUBCASE("constant series is exact") {
    for (TransformKind k : {TransformKind::BorelLeroy, TransformKind::MittagLeffler}) {
      for (double u : {0.3, 1.0, 2.2}) {
        for (int q : {1, 8, 64}) {
          CHECK(transforms::evaluate_resummed({2.75}, k, 0.5, u, 3.0, q) ==
                doctest::Approx(2.75).epsilon(1e-12));
        }
      }
    }
  }
  SUBCASE("linear series grows like Gamma(2) C_1 x") {
    // (1 + x) at u = 0, beta = 1: b = (1, 1), root 1 + x, integral 1 + x
    for (double x : {10.0, 1e3, 1e5}) {
      CHECK(transforms::evaluate_resummed({1.0, 1.0}, TransformKind::BorelLeroy, 1.0, 0.0, x) ==
            doctest::Approx(1.0 + x).epsilon(1e-10));
    }
  }
  SUBCASE("fractional kinds are unsupported") {
    CHECK_THROWS_AS(transforms::evaluate_resummed({1.0, 1.0}, TransformKind::FractionalIntegral,
                                                  0.5, 0.0, 1.0),
                    UnsupportedKindError);
    CHECK_THROWS_AS(transforms::evaluate_resummed({1.0, 1.0}, TransformKind::FractionalDerivative,
                                                  0.5, 0.0, 1.0),
                    UnsupportedKindError);
  }
  SUBCASE("energy series: small x follows the series, large x the amplitude") {
    const auto& p = benchmarks::problem("schwinger-energy");
    const TruncatedSeries s = p.summed_series();
    const double beta = p.summed_beta();
    for (TransformKind k : {TransformKind::BorelLeroy, TransformKind::MittagLeffler}) {
      const double u = k == TransformKind::BorelLeroy ? 0.5 : 1.0;
      INFO(to_string(k));
      const double x = 0.02;
      const double sum = transforms::evaluate_resummed(s, k, beta, u, x);
      CHECK(std::abs(sum - s.evaluate(x)) < 1e-4);

      const AmplitudeCurve curve{s, k, beta, s.order()};
      const double B = optimizer::amplitude_at(curve, u);
      const double X = 1e6;
      const double far = transforms::evaluate_resummed(s, k, beta, u, X) / std::pow(X, beta);
      CHECK(std::abs(far - B) <= 0.02 * std::abs(B));
    }
  }
}

}
