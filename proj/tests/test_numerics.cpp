#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "resum/errors.hpp"
#include "resum/numerics.hpp"

using namespace resum;
using numerics::ScanGrid;

namespace {

numerics::PartialFunction total(double (*f)(double)) {
  return [f](double u) -> std::optional<double> { return f(u); };
}

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("gamma at known points") {
  CHECK(numerics::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(numerics::gamma(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-13));
  // mpmath, 30 digits
  CHECK(numerics::gamma(4.0 / 3.0) == doctest::Approx(0.892979511569249211).epsilon(1e-13));
  CHECK(numerics::gamma(-0.5) == doctest::Approx(-3.5449077018110320).epsilon(1e-13));
}

TEST_CASE("gamma poles and overflow") {
  CHECK_THROWS_AS(numerics::gamma(0.0), PoleError);
  CHECK_THROWS_AS(numerics::gamma(-3.0), PoleError);
  CHECK_THROWS_AS(numerics::gamma(-3.0 + 1e-13), PoleError);
  CHECK_NOTHROW(numerics::gamma(-3.0 + 1e-6));
  CHECK_THROWS_AS(numerics::gamma(200.0), OverflowError);
}

TEST_CASE("gamma recurrence on random sample") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(0.1, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double x = d(rng);
    const double lhs = numerics::gamma(x + 1.0);
    const double rhs = x * numerics::gamma(x);
    CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(lhs));
  }
}

TEST_CASE("gamma reflection on random negative sample") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-10.0, 0.0);
  int checked = 0;
  while (checked < 500) {
    const double x = d(rng);
    if (std::abs(x - std::round(x)) < 1e-3) continue;
    const double v = numerics::gamma(x) * numerics::gamma(1.0 - x) *
                     std::sin(std::numbers::pi * x) / std::numbers::pi;
    CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
    ++checked;
  }
}

TEST_CASE("find_roots") {
  SUBCASE("two simple roots") {
    auto r = numerics::find_roots(total([](double u) { return u * u - 1.0; }),
                                  ScanGrid(-3.0, 3.0, 601), 1e-10);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(r[1] == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("no real root") {
    CHECK(numerics::find_roots(total([](double u) { return u * u + 1.0; }),
                               ScanGrid(-3.0, 3.0, 601), 1e-10)
              .empty());
  }
  SUBCASE("sine") {
    auto r = numerics::find_roots(total([](double u) { return std::sin(u); }),
                                  ScanGrid(0.5, 7.0, 1301), 1e-10);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - std::numbers::pi) < 1e-10);
    CHECK(std::abs(r[1] - 2.0 * std::numbers::pi) < 1e-10);
  }
  SUBCASE("polynomial with known simple roots") {
    auto p = total([](double u) { return (u + 2.5) * (u + 0.3) * (u - 1.7) * (u - 2.2); });
    auto r = numerics::find_roots(p, ScanGrid(-4.0, 4.0, 801), 1e-11);
    REQUIRE(r.size() == 4);
    const double want[] = {-2.5, -0.3, 1.7, 2.2};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(r[i] - want[i]) < 1e-10);
  }
  SUBCASE("undefined points split the scan") {
    // 1/u changes sign across the pole at 0 but has no root there
    numerics::PartialFunction f = [](double u) -> std::optional<double> {
      if (std::abs(u) < 0.05) return std::nullopt;
      return 1.0 / u;
    };
    CHECK(numerics::find_roots(f, ScanGrid(-1.0, 1.0, 201), 1e-10).empty());
  }
  SUBCASE("identically zero stretch yields no roots") {
    numerics::PartialFunction f = [](double) -> std::optional<double> { return 0.0; };
    CHECK(numerics::find_roots(f, ScanGrid(-1.0, 1.0, 21), 1e-10).empty());
  }
}

TEST_CASE("minimize_scalar") {
  CHECK(numerics::minimize_scalar(total([](double u) { return (u - 2.0) * (u - 2.0); }),
                                  ScanGrid(-5.0, 5.0, 1001), 1e-8) ==
        doctest::Approx(2.0).epsilon(1e-7));
  CHECK(std::abs(numerics::minimize_scalar(total([](double u) { return std::abs(u) + 1.0; }),
                                           ScanGrid(-1.0, 1.0, 101), 1e-8)) < 1e-7);
  CHECK(numerics::minimize_scalar(total([](double u) { return std::cos(u); }),
                                  ScanGrid(0.0, 2.0 * std::numbers::pi, 629), 1e-9) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-6));

  numerics::PartialFunction nowhere = [](double) -> std::optional<double> { return std::nullopt; };
  CHECK_THROWS_AS(numerics::minimize_scalar(nowhere, ScanGrid(0.0, 1.0, 11), 1e-8),
                  NoDefinedPointError);
}

TEST_CASE("derivative") {
  CHECK(std::abs(numerics::derivative(total([](double u) { return u * u; }), 3.0, 1e-4) - 6.0) <
        1e-8);
  CHECK(numerics::derivative(total([](double) { return 4.2; }), -1.3, 1e-4) == 0.0);
  CHECK(std::abs(numerics::derivative(total([](double u) { return std::exp(u); }), 1.0, 1e-4) -
                 std::numbers::e) < 1e-8);

  numerics::PartialFunction gap = [](double u) -> std::optional<double> {
    if (u > 0.0) return std::nullopt;
    return u;
  };
  CHECK_THROWS_AS(numerics::derivative(gap, 0.0, 1e-3), UndefinedError);
}

TEST_CASE("derivative error shrinks like h^4") {
  auto f = total([](double u) { return std::sin(3.0 * u) * std::exp(u); });
  const double u = 0.4;
  const double exact = std::exp(u) * (3.0 * std::cos(3.0 * u) + std::sin(3.0 * u));
  const double e1 = std::abs(numerics::derivative(f, u, 0.1) - exact);
  const double e2 = std::abs(numerics::derivative(f, u, 0.05) - exact);
  // 2^4 = 16 in the asymptotic regime
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("gauss_laguerre_nodes") {
  SUBCASE("order 1") {
    auto r = numerics::gauss_laguerre_nodes(1);
    REQUIRE(r.size() == 1);
    CHECK(r[0].node == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r[0].weight == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("order 2 closed form") {
    auto r = numerics::gauss_laguerre_nodes(2);
    REQUIRE(r.size() == 2);
    const double s = std::sqrt(2.0);
    CHECK(r[0].node == doctest::Approx(2.0 - s).epsilon(1e-13));
    CHECK(r[1].node == doctest::Approx(2.0 + s).epsilon(1e-13));
    CHECK(r[0].weight == doctest::Approx((2.0 + s) / 4.0).epsilon(1e-13));
    CHECK(r[1].weight == doctest::Approx((2.0 - s) / 4.0).epsilon(1e-13));
  }
  SUBCASE("order 16 normalization and exactness") {
    auto r = numerics::gauss_laguerre_nodes(16);
    double sum = 0.0;
    for (const auto& q : r) sum += q.weight;
    CHECK(std::abs(sum - 1.0) < 1e-12);
    // int t^m e^-t = m! up to degree 2*16-1
    for (int m : {5, 12, 20}) {
      double acc = 0.0;
      for (const auto& q : r) acc += q.weight * std::pow(q.node, m);
      CHECK(acc == doctest::Approx(std::tgamma(m + 1.0)).epsilon(1e-9));
    }
  }
  SUBCASE("generalized weight") {
    auto r = numerics::gauss_laguerre_nodes(8, 0.5);
    double sum = 0.0;
    for (const auto& q : r) sum += q.weight;
    CHECK(sum == doctest::Approx(std::tgamma(1.5)).epsilon(1e-12));
  }
  CHECK_THROWS(numerics::gauss_laguerre_nodes(0));
  CHECK_THROWS(numerics::gauss_laguerre_nodes(129));
}

TEST_CASE("ScanGrid") {
  const ScanGrid g(-8.0, 3.0, 2201);
  CHECK(g.at(0) == -8.0);
  CHECK(g.at(2200) == 3.0);
  CHECK(g.step() == doctest::Approx(0.005));
  CHECK(numerics::default_grid().lo() == -8.0);
  CHECK(numerics::default_grid().hi() == 3.0);
  CHECK(numerics::default_grid().points() == 2201);

  const auto p = ScanGrid::parse("-2.5:4:11");
  CHECK(p.lo() == -2.5);
  CHECK(p.hi() == 4.0);
  CHECK(p.points() == 11);
  CHECK_THROWS(ScanGrid::parse("1:2"));
  CHECK_THROWS(ScanGrid::parse("a:2:5"));
  CHECK_THROWS(ScanGrid(1.0, 1.0, 5));
  CHECK_THROWS(ScanGrid(0.0, 1.0, 1));

  const auto c = g.clipped(-1.0, 0.5);
  REQUIRE(c);
  CHECK(c->lo() == -1.0);
  CHECK(c->hi() == 0.5);
  CHECK(c->step() <= g.step() * (1.0 + 1e-12));
  CHECK_FALSE(g.clipped(1.0, 1.0));
}

}
