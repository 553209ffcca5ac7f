#include "resum/benchmarks.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <future>
#include <numbers>
#include <stdexcept>
#include <string>

#include "resum/errors.hpp"

namespace resum {

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::ExactRoot: return "exact-root";
    case RowStatus::Approximate: return "approximate";
    case RowStatus::Undefined: return "undefined";
  }
  return "unknown";
}

TruncatedSeries BenchmarkProblem::summed_series() const {
  const TruncatedSeries s = series.truncated(usable_order).scaled(prefactor);
  return quantity == Quantity::Index ? series::diff_log(s) : s;
}

double BenchmarkProblem::summed_beta() const {
  return quantity == Quantity::Index ? -1.0 : target.beta;
}

const TableRow& KindReport::result(Method m) const {
  return rows[static_cast<std::size_t>(m)];
}

namespace benchmarks {
namespace {

double parse_decimal(std::string_view t) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || end != t.data() + t.size())
    throw std::invalid_argument("not a decimal: '" + std::string(t) + "'");
  return v;
}

TruncatedSeries from_printed(const std::vector<std::string>& printed) {
  std::vector<double> c;
  for (const auto& p : printed) c.push_back(parse_printed(p));
  return TruncatedSeries(std::move(c));
}

BenchmarkProblem make(std::string id, std::string title, std::vector<std::string> printed,
                      double beta, std::optional<double> reference, std::string note) {
  BenchmarkProblem p;
  p.id = std::move(id);
  p.title = std::move(title);
  p.series = from_printed(printed);
  p.printed = std::move(printed);
  p.target = {beta, reference};
  p.reference_amplitude = reference;
  p.reference_note = std::move(note);
  p.usable_order = p.series.order();
  return p;
}

std::vector<std::string> to_printed(const TruncatedSeries& s) {
  std::vector<std::string> out;
  char buf[64];
  for (double c : s.coeffs()) {
    const auto r = std::to_chars(buf, buf + sizeof buf, c);
    out.emplace_back(buf, r.ptr);
  }
  return out;
}

std::vector<BenchmarkProblem> build_registry() {
  std::vector<BenchmarkProblem> r;

  r.push_back(make("schwinger-gap", "Schwinger model energy gap 2*Delta(z)",
                   {"1", "6", "-26", "190.6666666667", "-1756.666666667", "18048.33650794"},
                   0.25, 2 * 1.1284, "2B with B = 1.1284"));
  r.back().errata.push_back("only orders 0..5 printed; the order-11 table is not reproducible");

  r.push_back(make("schwinger-energy", "Schwinger model ground-state energy",
                   {"0.5642", "-0.219", "0.1907"}, -1.0 / 3, 0.6418, "large-x amplitude"));

  r.push_back(make("schwinger-energy-padded", "Schwinger model energy, padded with a_3 = 0",
                   {"0.5642", "-0.219", "0.1907", "0"}, -1.0 / 3, 0.6418, "large-x amplitude"));

  r.push_back(make("anomalous-dimension", "Cusp anomalous dimension",
                   {"4", "-13.1595", "95.2444", "-937.431"}, -0.5, 2.0, "exact"));

  r.push_back(make("quartic-oscillator", "Quartic anharmonic oscillator ground state",
                   {"1/2", "3/4", "-21/8", "333/16", "-30885/128"}, 1.0 / 3, 0.667986,
                   "exact"));
  r.back().errata.push_back("only orders 0..4 printed; the order-11 table is not reproducible");

  r.push_back(make("trap-3d", "Bose condensate in a 3D harmonic trap",
                   {"3/2", "1/2", "-3/16", "9/64", "-35/256"}, 0.4, 1.25, "exact"));

  r.push_back(make("trap-1d", "Nonlinear 1D trap",
                   {"1", "1", "-1/8", "1/32", "-1/128", "3/2048"}, 2.0 / 3, 1.5, "exact"));

  r.push_back(make("polymer-2d", "2D polymer swelling factor",
                   {"1", "1/2", "-0.12154525", "0.02663136", "-0.13223603"}, 0.5, std::nullopt,
                   "order unity, not known exactly"));

  r.push_back(make("polymer-3d", "3D polymer expansion factor",
                   {"1", "4/3", "-2.075385396", "6.296879676", "-25.05725072", "116.134785",
                    "-594.71663"},
                   0.3544, 1.5309, "numerical"));

  // c_1(g)/g: the leading power g is divided out so that b_0 != 0.
  r.push_back(make("bose-shift", "Bose condensation temperature shift c_1(g)/g",
                   {"0.223286", "-0.0661032", "0.026446", "-0.0129177", "0.00729073"}, -1.0,
                   1.3, "Monte Carlo 1.3 +- 0.05"));
  r.push_back(make("o1-field", "O(1) field theory c_1(g)/g",
                   {"0.334931", "-0.178478", "0.129786", "-0.115999", "0.120433"}, -1.0, 1.09,
                   "Monte Carlo 1.09 +- 0.09"));
  r.push_back(make("o4-field", "O(4) field theory c_1(g)/g",
                   {"0.167465", "-0.0297465", "0.00700448", "-0.00198926", "0.000647007"}, -1.0,
                   1.6, "Monte Carlo 1.6 +- 0.1"));

  // e(x)/x^2: the amplitude of x^{-2} is E(infinity).
  r.push_back(make("bose-gas-1d", "1D Bose gas ground-state energy e(x)/x^2",
                   {"1", "-0.4244131815783876", "0.06534548302432888", "-0.001587699865505945",
                    "-0.00016846018782773904", "-0.00002086497335840174",
                    "-3.1632142185373668e-6", "-6.106860595675022e-7",
                    "-1.4840346726187777e-7"},
                   -2.0, std::numbers::pi * std::numbers::pi / 3, "Tonks-Girardeau limit pi^2/3"));

  r.push_back(make("membrane", "Fluctuating membrane pressure, bracketed series",
                   {"1", "1/4", "1/32", "2.176347e-3", "0.552721e-4", "-0.721482e-5",
                    "-1.777848e-6"},
                   2.0, 0.0798, "Monte Carlo 0.0798 +- 0.0003, includes the pi^2/8 prefactor"));
  r.back().prefactor = std::numbers::pi * std::numbers::pi / 8;

  {
    const auto s = generate_gaussian_polymer(11);
    r.push_back(make("gaussian-polymer", "Gaussian polymer Debye function", to_printed(s), -1.0,
                     2.0, "exact"));
  }
  {
    const auto s = generate_wilson_loop(11);
    r.push_back(make("wilson-loop", "Circular Wilson loop", to_printed(s), -1.5,
                     std::sqrt(2.0 / std::numbers::pi), "exact sqrt(2/pi)"));
  }

  r.push_back(make("hard-disc", "Hard-disc compressibility factor after f = x/(1+x)",
                   {"1", "2", "1.12802", "0.00181", "-0.05259", "0.05038", "-0.03234", "0.01397",
                    "-0.0033", "0.00618"},
                   -1.0, std::nullopt, "index estimate; conjectured near 2, earlier estimate 1.884 +- 0.02"));
  r.back().quantity = Quantity::Index;
  r.back().errata.push_back(
      "the filling series prints 3.12802 f^3 for the f^2 term; read as 3.12802 f^2, which "
      "reproduces the x-series under f = x/(1+x)");
  return r;
}

std::vector<ReferenceTable> build_tables() {
  using K = TransformKind;
  constexpr std::optional<double> na = std::nullopt;
  auto same = [](double v, std::optional<double> f) {
    return std::array<std::optional<double>, 5>{v, v, v, v, f};
  };
  std::vector<ReferenceTable> t;

  t.push_back({1, "schwinger-gap", 11,
               {{K::MittagLeffler, same(1.20788, 1.17234)},
                {K::BorelLeroy, {na, na, na, na, 1.16805}},
                {K::FractionalDerivative, {1.55562, 1.55562, 1.58458, 1.55562, 1.15757}},
                {K::FractionalIntegral, {1.35252, 1.35252, 1.36432, 1.36432, 1.16269}}},
               false, "not reproducible: coefficients unavailable above order 5"});
  t.push_back({2, "schwinger-energy", 2,
               {{K::MittagLeffler, same(0.551877, 0.62336)},
                {K::BorelLeroy, {0.551495, 0.551495, 0.550929, 0.550929, 0.647848}},
                {K::FractionalDerivative, {na, na, na, na, 0.696407}},
                {K::FractionalIntegral, {0.51141, 0.51141, 0.473248, 0.473248, 0.672065}}}});
  t.push_back({3, "schwinger-energy-padded", 3,
               {{K::FractionalIntegral, {0.615054, 0.615054, 0.59844, 0.59884, 0.65596}}}});
  t.push_back({4, "anomalous-dimension", 3,
               {{K::MittagLeffler, {2.08308, 1.93162, 2.08308, 2.08308, 1.99381}},
                {K::BorelLeroy, {2.01177, 2.01177, 1.93142, 1.93142, 2.05526}},
                {K::FractionalDerivative, same(1.52111, 2.44164)},
                {K::FractionalIntegral, {2.0488, 2.0488, 1.70916, 1.70916, 2.32582}}}});
  t.push_back({5, "quartic-oscillator", 11,
               {{K::MittagLeffler, {0.682136, 0.682136, 0.692631, 0.692631, 0.679929}},
                {K::BorelLeroy, {0.674414, 0.674414, 0.677297, 0.677297, 0.677097}},
                {K::FractionalDerivative, {0.674121, 0.674121, 0.689068, 0.674477, 0.677112}},
                {K::FractionalIntegral, {0.67498, 0.67498, 0.694167, 0.694167, 0.679967}}},
               false, "not reproducible: coefficients unavailable above order 4"});
  t.push_back({6, "trap-3d", 4,
               {{K::MittagLeffler, {1.28579, 1.28162, 1.28579, 1.28579, 1.28553}},
                {K::BorelLeroy, {1.28664, 1.28664, 1.28664, 1.28951, 1.28523}},
                {K::FractionalDerivative, same(1.28677, 1.28473)},
                {K::FractionalIntegral, {1.28602, 1.28602, 1.32334, 1.32334, 1.28493}}}});
  t.push_back({7, "trap-1d", 5,
               {{K::MittagLeffler, {1.44736, 1.44795, 1.44736, 1.44736, 1.36429}},
                {K::BorelLeroy, {na, na, na, na, 1.38647}},
                {K::FractionalDerivative, same(1.53989, 1.38512)},
                {K::FractionalIntegral, {1.4809, 1.4809, 1.50378, 1.50378, 1.36135}}}});
  t.push_back({8, "polymer-2d", 4,
               {{K::MittagLeffler, {0.972576, 0.972582, 0.972576, 0.972576, 0.9703}},
                {K::BorelLeroy, {0.975689, 0.975689, 0.976097, 0.976097, 0.969957}},
                {K::FractionalDerivative, same(0.97779, 0.969277)},
                {K::FractionalIntegral, {0.974145, 0.974145, 0.974499, 0.974499, 0.969564}}}});
  t.push_back({9, "polymer-3d", 6,
               {{K::MittagLeffler, {1.53574, 1.53765, 1.53574, 1.53574, 1.52826}},
                {K::BorelLeroy, {1.53228, 1.53228, 1.53267, 1.53267, 1.52607}},
                {K::FractionalDerivative, {1.54154, 1.54154, 1.56952, 1.54154, 1.52693}},
                {K::FractionalIntegral, {1.53565, 1.53565, 1.53362, 1.53362, 1.52728}}}});
  t.push_back({10, "bose-shift", 4,
               {{K::MittagLeffler, {1.33967, 1.23142, 1.33967, 1.33967, 1.244}},
                {K::BorelLeroy, {1.28676, 1.28676, 1.18035, 1.18035, 1.37587}},
                {K::FractionalDerivative, same(1.28951, 1.53199)},
                {K::FractionalIntegral, {1.26409, 1.26409, 1.05911, 1.05911, 1.54664}}},
               true, "", 1e-2});
  t.push_back({11, "o1-field", 4,
               {{K::MittagLeffler, {1.14124, 1.04749, 1.14124, 1.04749, 1.05845}},
                {K::BorelLeroy, {1.09556, 1.09556, 0.994172, 0.994172, 1.18093}},
                {K::FractionalDerivative, same(1.09922, 1.30128)},
                {K::FractionalIntegral, same(1.07384, 1.31773)}},
               true, "", 1e-2});
  t.push_back({12, "o4-field", 4,
               {{K::MittagLeffler, {1.60226, 1.48142, 1.60226, 1.60226, 1.49524}},
                {K::BorelLeroy, {1.53953, 1.53953, 1.42394, 1.42394, 1.64361}},
                {K::FractionalDerivative, same(1.54101, 1.75795)},
                {K::FractionalIntegral, {1.50931, 1.50931, 1.30641, 1.30641, 1.34281}}},
               true, "", 1e-2});
  t.push_back({13, "bose-gas-1d", 8,
               {{K::MittagLeffler, same(3.51951, na)},
                {K::BorelLeroy, {na, na, na, na, na}},
                {K::FractionalDerivative, same(2.59989, 4.50635)},
                {K::FractionalIntegral, {3.08574, 4.79312, 3.08574, 3.08574, 4.50604}}}});
  t.push_back({14, "membrane", 6,
               {{K::MittagLeffler, {0.027276, 0.070684, 0.044611, 0.044611, 0.059829}},
                {K::BorelLeroy, {0.065546, 0.065546, 0.064646, 0.065546, 0.05978}},
                {K::FractionalDerivative, same(0.080764, 0.059829)},
                {K::FractionalIntegral, {0.076602, 0.076602, 0.076647, 0.076647, 0.059829}}}});
  t.push_back({15, "gaussian-polymer", 11,
               {{K::MittagLeffler, {1.96426, 1.97148, 1.96426, 1.96426, 1.96718}},
                {K::BorelLeroy, same(1.95046, 2.48132)},
                {K::FractionalDerivative, same(1.85218, 2.07931)},
                {K::FractionalIntegral, {1.93178, 1.93178, 1.80271, 1.80271, 2.17141}}}});
  t.push_back({16, "wilson-loop", 11,
               {{K::MittagLeffler, same(0.813797, na)},
                {K::BorelLeroy, same(0.817901, 1.39674)},
                {K::FractionalDerivative, same(0.730468, 0.90277)},
                {K::FractionalIntegral, {0.783575, 0.783575, 0.705646, 0.705646, 0.902261}}}});
  t.push_back({17, "hard-disc", 9,
               {{K::MittagLeffler, {1.83516, 1.83522, 1.83516, 1.83516, 1.83517}},
                {K::BorelLeroy, {1.7852, 1.7852, 1.79197, 1.79197, 2.16601}},
                {K::FractionalDerivative, same(1.79208, 2.24014)},
                {K::FractionalIntegral, {1.79963, 1.79963, 1.80465, 1.80465, 1.80968}}},
               true, "", 2e-2, true});
  return t;
}

TableRow undefined_row(TransformKind kind, Method m) { return {"", kind, m, 0.0, 0.0, RowStatus::Undefined}; }

}  // namespace

double parse_printed(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty coefficient");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const double num = parse_decimal(text.substr(0, slash));
  const double den = parse_decimal(text.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

const std::vector<BenchmarkProblem>& registry() {
  static const std::vector<BenchmarkProblem> r = build_registry();
  return r;
}

const BenchmarkProblem& problem(std::string_view id) {
  for (const auto& p : registry()) {
    if (p.id == id) return p;
  }
  throw std::out_of_range("unknown problem '" + std::string(id) + "'");
}

TruncatedSeries generate_gaussian_polymer(int order) {
  if (order < 0) throw std::invalid_argument("generate_gaussian_polymer: negative order");
  std::vector<double> a(static_cast<std::size_t>(order) + 1);
  double fact = 2.0;  // (n + 2)!
  for (int n = 0; n <= order; ++n) {
    a[n] = (n % 2 == 0 ? 2.0 : -2.0) / fact;
    fact *= n + 3;
  }
  return TruncatedSeries(std::move(a));
}

TruncatedSeries generate_wilson_loop(int order) {
  if (order < 0) throw std::invalid_argument("generate_wilson_loop: negative order");
  std::vector<double> e(static_cast<std::size_t>(order) + 1);
  std::vector<double> b(static_cast<std::size_t>(order) + 1, 0.0);
  double fact = 1.0;
  for (int m = 0; m <= order; ++m) {
    if (m > 0) fact *= m;
    e[m] = (m % 2 == 0 ? 1.0 : -1.0) / fact;
  }
  for (int m = 0; 2 * m <= order; ++m) {
    b[2 * m] = 1.0 / (std::pow(4.0, m) * std::tgamma(m + 1.0) * std::tgamma(m + 2.0));
  }
  auto a = series::cauchy_product(TruncatedSeries(std::move(e)), TruncatedSeries(std::move(b)),
                                  order);

  // a_n = (-1)^n sum_m C(n, 2m) Catalan(m) 4^(M - m) / (n! 4^M), M = n / 2.
  // Numerator and n! stay exact in a double through n = 18, so one rounding.
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  std::int64_t nfact = 1;
  for (int n = 0; n <= std::min(order, 18); ++n) {
    if (n > 0) nfact *= n;
    const int M = n / 2;
    std::int64_t num = 0, binom = 1, catalan = 1;  // C(n, 2m), Catalan(m)
    for (int m = 0; m <= M; ++m) {
      if (m > 0) {
        binom = binom * (n - 2 * m + 2) * (n - 2 * m + 1) / ((2 * m - 1) * (2 * m));
        catalan = catalan * 2 * (2 * m - 1) / (m + 1);
      }
      num += binom * catalan * (std::int64_t{1} << (2 * (M - m)));
    }
    const double v = static_cast<double>(num) / static_cast<double>(nfact);
    c[n] = std::ldexp(n % 2 == 0 ? v : -v, -2 * M);
  }
  return TruncatedSeries(std::move(c));
}

numerics::ScanGrid default_grid(TransformKind kind) {
  if (kind == TransformKind::FractionalIntegral) return numerics::default_grid();
  return numerics::ScanGrid(-8.0, 12.0, 4001);
}

std::optional<numerics::ScanGrid> domain_grid(const numerics::ScanGrid& base, TransformKind kind,
                                              double beta, int order) {
  constexpr double margin = 1e-4;
  const auto d = transforms::parameter_domain(kind, beta, order);
  if (d.empty()) return std::nullopt;
  return base.clipped(d.lo_closed ? d.lo : d.lo + margin, d.hi_closed ? d.hi : d.hi - margin);
}

KindReport analyze_kind(const TruncatedSeries& s, double beta, TransformKind kind,
                        const numerics::ScanGrid& grid) {
  return analyze_kind(s, beta, kind, grid, default_representation(kind, beta, s.order()));
}

KindReport analyze_kind(const TruncatedSeries& s, double beta, TransformKind kind,
                        const numerics::ScanGrid& grid, Representation representation) {
  const int K = s.order();
  if (K < 1) throw DegenerateOrderError("order too low");

  KindReport rep{kind, representation, K, {}, {}, {}};
  for (Method m : kAllMethods) rep.rows[static_cast<std::size_t>(m)] = undefined_row(kind, m);

  const auto window =
      domain_grid(grid, kind, optimizer::working_beta(beta, representation), K);
  if (!window) return rep;

  auto collect = [&](std::vector<OptimizationSolution> found) {
    for (auto& sol : found) (sol.approximate ? rep.approximate : rep.solutions).push_back(sol);
  };
  collect(optimizer::solve_min_difference(s, kind, beta, K - 1, *window, representation));
  collect(optimizer::solve_min_derivative(s, kind, beta, K, *window, representation));
  optimizer::sort_solutions(rep.solutions);

  if (!rep.solutions.empty()) {
    for (Criterion c : kAllCriteria) {
      try {
        const auto sel = selector::select(c, s, kind, rep.solutions);
        const Method m = method_of(c);
        rep.rows[static_cast<std::size_t>(m)] = {"", kind, m, sel.chosen.amplitude, sel.chosen.u,
                                                 RowStatus::ExactRoot};
      } catch (const Error&) {
      }
    }
  }
  try {
    const auto r = optimizer::ridge_minimize(s, kind, beta, K - 1, *window, 0.5, representation);
    rep.rows[static_cast<std::size_t>(Method::Ridge)] = {"", kind, Method::Ridge, r.amplitude, r.u,
                                                         RowStatus::ExactRoot};
  } catch (const Error&) {
  }
  return rep;
}

std::vector<TableRow> run_table(const BenchmarkProblem& p, const std::vector<TransformKind>& kinds,
                                const std::vector<Method>& methods,
                                const std::optional<numerics::ScanGrid>& grid) {
  const TruncatedSeries s = p.summed_series();
  const double beta = p.summed_beta();
  std::vector<std::future<KindReport>> jobs;
  for (TransformKind kind : kinds) {
    jobs.push_back(std::async(std::launch::async, [&, kind] {
      return analyze_kind(s, beta, kind, grid ? *grid : default_grid(kind));
    }));
  }
  std::vector<TableRow> rows;
  for (auto& j : jobs) {
    const KindReport rep = j.get();
    for (Method m : methods) {
      TableRow row = rep.result(m);
      row.problem = p.id;
      rows.push_back(row);
    }
  }
  return rows;
}

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> t = build_tables();
  return t;
}

const ReferenceTable& reference_table(int number) {
  for (const auto& t : reference_tables()) {
    if (t.number == number) return t;
  }
  throw std::out_of_range("no stored table " + std::to_string(number));
}

}  // namespace benchmarks
}  // namespace resum
