#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "format.hpp"
#include "resum/benchmarks.hpp"
#include "resum/errors.hpp"
#include "resum/optimizer.hpp"

namespace resum::cli {
namespace {

using nlohmann::json;

// Undefined values are null in JSON and empty cells in CSV.
json num(const std::optional<double>& x) { return x ? json(rounded6(*x)) : json(nullptr); }
json raw(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + '"';
}

std::string csv_join(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line + '\n';
}

std::string_view extension(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: return "txt";
  }
  return "txt";
}

// Writes to DIR/stem.ext when --out is set, else to out.
void emit(const Options& opt, std::string_view stem, const std::string& text, std::ostream& out) {
  if (!opt.out) {
    out << text;
    return;
  }
  std::filesystem::create_directories(*opt.out);
  std::ofstream f(*opt.out / (std::string(stem) + "." + std::string(extension(opt.format))),
                  std::ios::binary);
  f << text;
}

std::vector<TransformKind> pick_kinds(const Options& opt, const ProblemFile& file) {
  if (!opt.kinds.empty()) return opt.kinds;
  if (!file.kinds.empty()) return file.kinds;
  return {kAllKinds.begin(), kAllKinds.end()};
}

std::vector<Method> pick_methods(const Options& opt, const ProblemFile& file) {
  if (!opt.methods.empty()) return opt.methods;
  if (!file.methods.empty()) return file.methods;
  return {std::begin(kAllMethods), std::end(kAllMethods)};
}

std::string display_name(const ProblemFile& file) {
  return file.name.empty() ? std::string("problem") : file.name;
}

std::string render_sum(const ProblemFile& file, const TruncatedSeries& s, double beta,
                       const std::vector<KindReport>& reports, const std::vector<Method>& methods,
                       Format format) {
  auto row_values = [](const TableRow& r) -> std::pair<std::optional<double>, std::optional<double>> {
    if (r.status == RowStatus::Undefined) return {};
    return {r.u, r.amplitude};
  };

  if (format == Format::Json) {
    json doc;
    doc["problem"] = display_name(file);
    doc["k"] = s.order();
    doc["beta"] = rounded6(beta);
    doc["raw"] = {{"beta", beta}};
    doc["kinds"] = json::array();
    for (const auto& rep : reports) {
      json k;
      k["kind"] = to_string(rep.kind);
      k["representation"] = to_string(rep.representation);
      k["solutions"] = json::array();
      for (const auto* list : {&rep.solutions, &rep.approximate}) {
        for (const auto& sol : *list) {
          json j{{"condition", to_string(sol.condition)},
                 {"u", rounded6(sol.u)},
                 {"amplitude", rounded6(sol.amplitude)},
                 {"approximate", sol.approximate},
                 {"raw", {{"u", sol.u}, {"amplitude", sol.amplitude}}}};
          if (sol.approximate) {
            j["width"] = rounded6(sol.width);
            j["raw"]["width"] = sol.width;
          }
          k["solutions"].push_back(j);
        }
      }
      k["rows"] = json::array();
      for (Method m : methods) {
        const TableRow& r = rep.result(m);
        const auto [u, b] = row_values(r);
        k["rows"].push_back({{"method", to_string(m)},
                             {"status", to_string(r.status)},
                             {"u", num(u)},
                             {"amplitude", num(b)},
                             {"raw", {{"u", raw(u)}, {"amplitude", raw(b)}}}});
      }
      doc["kinds"].push_back(k);
    }
    return doc.dump(2) + '\n';
  }

  if (format == Format::Csv) {
    std::string text = "record,kind,name,status,u,amplitude\n";
    for (const auto& rep : reports) {
      const std::string kind(to_string(rep.kind));
      for (const auto* list : {&rep.solutions, &rep.approximate}) {
        for (const auto& sol : *list) {
          text += csv_join({"solution", kind, std::string(to_string(sol.condition)),
                            sol.approximate ? "approximate" : "exact-root", sig6(sol.u),
                            sig6(sol.amplitude)});
        }
      }
      for (Method m : methods) {
        const TableRow& r = rep.result(m);
        const auto [u, b] = row_values(r);
        text += csv_join({"row", kind, std::string(to_string(m)), std::string(to_string(r.status)),
                          sig6(u), sig6(b)});
      }
    }
    return text;
  }

  std::ostringstream o;
  o << display_name(file) << "  k=" << s.order() << "  beta=" << sig6(beta) << '\n';
  for (const auto& rep : reports) {
    o << '\n' << to_string(rep.kind) << " (" << to_string(rep.representation) << ")\n";
    if (rep.solutions.empty() && rep.approximate.empty()) o << "  no solutions\n";
    for (const auto& sol : rep.solutions) {
      o << "  " << std::left << std::setw(16) << to_string(sol.condition) << "u = " << std::setw(12)
        << sig6(sol.u) << "B = " << sig6(sol.amplitude) << '\n';
    }
    for (const auto& sol : rep.approximate) {
      o << "  " << std::left << std::setw(16) << to_string(sol.condition) << "u ~ " << std::setw(12)
        << sig6(sol.u) << "B ~ " << sig6(sol.amplitude) << " +- " << sig6(sol.width)
        << "  (no exact root)\n";
    }
    for (Method m : methods) {
      const TableRow& r = rep.result(m);
      o << "  " << std::left << std::setw(10) << to_string(m);
      if (r.status == RowStatus::Undefined) {
        o << "--\n";
        continue;
      }
      o << "B = " << std::setw(12) << sig6(r.amplitude) << "u = " << sig6(r.u) << '\n';
    }
  }
  return o.str();
}

struct Cell {
  TableRow row;
  std::optional<double> reference;
  std::optional<double> abs_dev;
  std::optional<double> rel_dev;
  bool within = false;
};

struct TableResult {
  const ReferenceTable* table;
  std::vector<Cell> cells;
  int passed = 0;
};

TableResult run_reference_table(const ReferenceTable& t, const Options& opt,
                            const std::optional<numerics::ScanGrid>& grid) {
  std::vector<TransformKind> kinds;
  for (const auto& r : t.rows) {
    if (opt.kinds.empty() ||
        std::find(opt.kinds.begin(), opt.kinds.end(), r.kind) != opt.kinds.end())
      kinds.push_back(r.kind);
  }
  std::vector<Method> methods = opt.methods;
  if (methods.empty()) methods.assign(std::begin(kAllMethods), std::end(kAllMethods));

  TableResult res{&t, {}, 0};
  const auto rows = benchmarks::run_table(benchmarks::problem(t.problem), kinds, methods, grid);
  for (const auto& row : rows) {
    Cell c{row, std::nullopt, std::nullopt, std::nullopt, false};
    for (const auto& pr : t.rows) {
      if (pr.kind == row.kind) c.reference = pr.cells[static_cast<std::size_t>(row.method)];
    }
    const bool defined = row.status != RowStatus::Undefined;
    if (!c.reference) {
      c.within = !defined;
    } else if (defined) {
      c.abs_dev = std::abs(row.amplitude - *c.reference);
      c.rel_dev = *c.abs_dev / std::abs(*c.reference);
      c.within = (t.absolute ? *c.abs_dev : *c.rel_dev) <= t.tolerance;
    }
    if (c.within) ++res.passed;
    res.cells.push_back(c);
  }
  return res;
}

std::string cell_value(const Cell& c) {
  return c.row.status == RowStatus::Undefined ? std::string() : sig6(c.row.amplitude);
}

std::string table_csv(const TableResult& r) {
  std::string text = "kind,method,status,u,value,reference,abs_dev,rel_dev,within\n";
  for (const auto& c : r.cells) {
    const bool defined = c.row.status != RowStatus::Undefined;
    text += csv_join({std::string(to_string(c.row.kind)), std::string(to_string(c.row.method)),
                      std::string(to_string(c.row.status)), defined ? sig6(c.row.u) : "",
                      cell_value(c), c.reference ? sig6(*c.reference) : "--", sig6(c.abs_dev),
                      sig6(c.rel_dev),
                      r.table->reproducible ? (c.within ? "yes" : "no") : "n/a"});
  }
  return text;
}

const char* kUnavailable = "not reproducible: coefficients unavailable";

std::string tolerance_text(const ReferenceTable& t) {
  return sig6(t.tolerance) + (t.absolute ? " absolute" : " relative");
}

}  // namespace

std::optional<numerics::ScanGrid> resolve_grid(const Options& opt, const ProblemFile* file) {
  if (opt.grid) return opt.grid;
  if (file && file->grid) return file->grid;
  if (const char* env = std::getenv("RESUM_GRID"); env && *env)
    return numerics::ScanGrid::parse(env);
  return std::nullopt;
}

int cmd_sum(const ProblemFile& file, const Options& opt, std::ostream& out, std::ostream& err) {
  const TruncatedSeries s = file.series();
  if (s.order() < 1) {
    err << "error: order too low (need at least two coefficients)\n";
    return kNoDefinedResult;
  }
  const double beta = file.summed_beta();
  const auto grid = resolve_grid(opt, &file);
  const auto kinds = pick_kinds(opt, file);
  const auto methods = pick_methods(opt, file);

  std::vector<std::future<KindReport>> jobs;
  for (TransformKind kind : kinds) {
    jobs.push_back(std::async(std::launch::async, [&, kind] {
      return benchmarks::analyze_kind(s, beta, kind, grid ? *grid : benchmarks::default_grid(kind));
    }));
  }
  std::vector<KindReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());

  emit(opt, "sum", render_sum(file, s, beta, reports, methods, opt.format), out);

  for (const auto& rep : reports) {
    for (Method m : methods) {
      if (rep.result(m).status != RowStatus::Undefined) return kOk;
    }
  }
  err << "error: no defined result for any kind\n";
  return kNoDefinedResult;
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<const ReferenceTable*> tables;
  if (opt.tables.empty()) {
    for (const auto& t : benchmarks::reference_tables()) tables.push_back(&t);
  } else {
    for (int n : opt.tables) {
      try {
        tables.push_back(&benchmarks::reference_table(n));
      } catch (const std::out_of_range&) {
        err << "error: no stored table " << n << '\n';
        return kInputError;
      }
    }
  }
  const auto grid = resolve_grid(opt, nullptr);

  std::vector<std::future<TableResult>> jobs;
  for (const ReferenceTable* t : tables) {
    jobs.push_back(std::async(std::launch::async, [&, t] { return run_reference_table(*t, opt, grid); }));
  }
  std::vector<TableResult> results;
  for (auto& j : jobs) results.push_back(j.get());

  const std::filesystem::path dir = opt.out.value_or("bench");
  std::filesystem::create_directories(dir);

  bool ok = true;
  std::string summary_csv = "table,problem,kind,method,status,value,reference,abs_dev,rel_dev,within,note\n";
  json summary = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    const ReferenceTable& t = *r.table;
    std::ostringstream name;
    name << "table_" << std::setw(2) << std::setfill('0') << t.number << ".csv";
    std::ofstream(dir / name.str(), std::ios::binary) << table_csv(r);

    const std::string note = t.reproducible ? std::string() : std::string(kUnavailable);
    const int cells = static_cast<int>(r.cells.size());
    if (t.reproducible && r.passed != cells) ok = false;

    json jt{{"table", t.number},
            {"problem", t.problem},
            {"k", t.k},
            {"reproducible", t.reproducible},
            {"tolerance", t.tolerance},
            {"absolute", t.absolute},
            {"cells", json::array()}};
    if (!t.reproducible) jt["note"] = note;

    text << "table " << std::setw(2) << std::setfill(' ') << t.number << "  " << std::left
         << std::setw(26) << t.problem << std::right << "k=" << t.k << "  ";
    if (!t.reproducible) {
      text << kUnavailable << '\n';
    } else {
      text << r.passed << '/' << cells << " within " << tolerance_text(t) << '\n';
    }

    for (const auto& c : r.cells) {
      const bool defined = c.row.status != RowStatus::Undefined;
      summary_csv += csv_join({std::to_string(t.number), t.problem, std::string(to_string(c.row.kind)),
                               std::string(to_string(c.row.method)),
                               std::string(to_string(c.row.status)), cell_value(c),
                               c.reference ? sig6(*c.reference) : "--", sig6(c.abs_dev), sig6(c.rel_dev),
                               t.reproducible ? (c.within ? "yes" : "no") : "n/a", note});
      const std::optional<double> value =
          defined ? std::optional<double>(c.row.amplitude) : std::nullopt;
      jt["cells"].push_back({{"kind", to_string(c.row.kind)},
                             {"method", to_string(c.row.method)},
                             {"status", to_string(c.row.status)},
                             {"value", num(value)},
                             {"reference", num(c.reference)},
                             {"abs_dev", num(c.abs_dev)},
                             {"rel_dev", num(c.rel_dev)},
                             {"within", c.within},
                             {"raw",
                              {{"value", raw(value)},
                               {"u", defined ? json(c.row.u) : json(nullptr)},
                               {"abs_dev", raw(c.abs_dev)},
                               {"rel_dev", raw(c.rel_dev)}}}});
      if (t.reproducible && !c.within) {
        text << "    " << std::left << std::setw(16) << to_string(c.row.kind) << std::setw(10)
             << to_string(c.row.method) << std::right << "got "
             << (defined ? sig6(c.row.amplitude) : std::string("--")) << "  reference "
             << (c.reference ? sig6(*c.reference) : std::string("--"));
        if (c.rel_dev) text << "  rel " << sig6(*c.rel_dev);
        text << '\n';
      }
    }
    summary.push_back(jt);
  }
  std::ofstream(dir / "summary.csv", std::ios::binary) << summary_csv;

  switch (opt.format) {
    case Format::Json: out << json{{"tables", summary}, {"ok", ok}}.dump(2) << '\n'; break;
    case Format::Csv: out << summary_csv; break;
    case Format::Text: out << text.str(); break;
  }
  return ok ? kOk : kToleranceFailure;
}

int cmd_scan(const ProblemFile& file, const Options& opt, std::ostream& out, std::ostream& err) {
  const TruncatedSeries s = file.series();
  if (s.order() < 1) {
    err << "error: order too low (need at least two coefficients)\n";
    return kNoDefinedResult;
  }
  const double beta = file.summed_beta();
  const int K = s.order();
  const auto grid = resolve_grid(opt, &file);

  struct Point {
    double u;
    std::optional<double> lower, upper, cost;
  };
  std::vector<std::pair<TransformKind, std::vector<Point>>> curves;
  bool any = false;
  for (TransformKind kind : pick_kinds(opt, file)) {
    const numerics::ScanGrid g = grid ? *grid : benchmarks::default_grid(kind);
    const Representation rep = default_representation(kind, beta, K);
    const AmplitudeCurve lower{s, kind, beta, K - 1, rep};
    const AmplitudeCurve upper{s, kind, beta, K, rep};
    const double h = optimizer::derivative_step(g);
    std::vector<Point> pts;
    for (int i = 0; i < g.points(); ++i) {
      const double u = g.at(i);
      Point p{u, optimizer::try_amplitude_at(lower, u), optimizer::try_amplitude_at(upper, u),
              optimizer::ridge_cost(s, kind, beta, K - 1, u, 0.5, h, rep)};
      any = any || p.lower || p.upper;
      pts.push_back(p);
    }
    curves.emplace_back(kind, std::move(pts));
  }

  std::string text;
  if (opt.format == Format::Json) {
    json doc{{"problem", display_name(file)}, {"k", K - 1}, {"kinds", json::array()}};
    for (const auto& [kind, pts] : curves) {
      json arr = json::array();
      for (const auto& p : pts) {
        arr.push_back({{"u", rounded6(p.u)},
                       {"B_k", num(p.lower)},
                       {"B_k+1", num(p.upper)},
                       {"F", num(p.cost)},
                       {"raw", {{"u", p.u}, {"B_k", raw(p.lower)}, {"B_k+1", raw(p.upper)}, {"F", raw(p.cost)}}}});
      }
      doc["kinds"].push_back({{"kind", to_string(kind)}, {"points", arr}});
    }
    text = doc.dump(2) + '\n';
  } else if (opt.format == Format::Csv) {
    text = "kind,u,B_k,B_k+1,F\n";
    for (const auto& [kind, pts] : curves) {
      for (const auto& p : pts) {
        text += csv_join({std::string(to_string(kind)), sig6(p.u), sig6(p.lower), sig6(p.upper),
                          sig6(p.cost)});
      }
    }
  } else {
    std::ostringstream o;
    o << std::left << std::setw(16) << "kind" << std::setw(14) << "u" << std::setw(14) << "B_k"
      << std::setw(14) << "B_k+1" << "F\n";
    auto cell = [](const std::optional<double>& x) { return x ? sig6(*x) : std::string("--"); };
    for (const auto& [kind, pts] : curves) {
      for (const auto& p : pts) {
        o << std::setw(16) << to_string(kind) << std::setw(14) << sig6(p.u) << std::setw(14)
          << cell(p.lower) << std::setw(14) << cell(p.upper) << cell(p.cost) << '\n';
      }
    }
    text = o.str();
  }
  emit(opt, "scan", text, out);
  if (!any) {
    err << "error: amplitude undefined on the whole grid\n";
    return kNoDefinedResult;
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resummation of truncated power series and strong-coupling amplitudes", "resum"};
  app.require_subcommand(1);

  std::string path;
  std::vector<std::string> kinds, criteria;
  std::string grid, format = "text", outdir;
  std::vector<int> tables;

  auto common = [&](CLI::App* sub, bool with_criterion) {
    sub->add_option("--kind", kinds, "Transform kinds (comma separated, or all)")->delimiter(',');
    if (with_criterion)
      sub->add_option("--criterion", criteria, "Selection criteria (comma separated, or all)")
          ->delimiter(',');
    sub->add_option("--grid", grid, "Control-parameter grid lo:hi:points");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", outdir, "Output directory");
  };

  auto* sum = app.add_subcommand("sum", "Sum the series in a problem file");
  sum->add_option("path", path, "Problem file")->required();
  common(sum, true);

  auto* bench = app.add_subcommand("bench", "Reproduce the stored benchmark tables");
  bench->add_option("--table", tables, "Table number (repeatable; default all)");
  common(bench, true);

  auto* scan = app.add_subcommand("scan", "Export B_k(u), B_k+1(u) and the ridge cost over a grid");
  scan->add_option("path", path, "Problem file")->required();
  common(scan, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Options opt;
  ProblemFile file;
  try {
    auto join = [](const std::vector<std::string>& items) {
      std::string s;
      for (const auto& i : items) s += (s.empty() ? "" : ",") + i;
      return s;
    };
    if (!kinds.empty()) opt.kinds = parse_kinds(join(kinds));
    if (!criteria.empty()) opt.methods = parse_methods(join(criteria));
    if (!grid.empty()) opt.grid = numerics::ScanGrid::parse(grid);
    opt.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    opt.tables = tables;
    if (!outdir.empty()) opt.out = outdir;
    resolve_grid(opt, nullptr);  // reject a malformed RESUM_GRID early
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (!path.empty()) {
    try {
      file = load_problem(path);
    } catch (const ParseError& e) {
      err << path << ':' << e.line() << ':' << e.column() << ": error: " << e.what() << '\n';
      return kInputError;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }

  try {
    if (*sum) return cmd_sum(file, opt, out, err);
    if (*bench) return cmd_bench(opt, out, err);
    return cmd_scan(file, opt, out, err);
  } catch (const DegenerateOrderError&) {
    err << "error: order too low\n";
    return kNoDefinedResult;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNoDefinedResult;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace resum::cli
