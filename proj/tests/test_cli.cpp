#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "problem_file.hpp"

using namespace resum;
using namespace resum::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("resum-test-" + std::to_string(std::hash<std::string>{}(
                                std::to_string(reinterpret_cast<std::uintptr_t>(this)))));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "resum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

const char* kAnomalous =
    "# comment line\n"
    "name = anomalous-dimension\n"
    "beta = -0.5\n"
    "coefficient = 4\n"
    "coefficient = -13.1595\n"
    "coefficient = 95.2444\n"
    "coefficient = -937.431\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("problem file parsing") {
  const auto p = parse_problem(kAnomalous);
  CHECK(p.name == "anomalous-dimension");
  CHECK(p.beta == "-0.5");
  REQUIRE(p.coefficients.size() == 4);
  CHECK(p.coefficients[1] == "-13.1595");
  CHECK(p.kinds.empty());
  CHECK(p.methods.empty());
  CHECK_FALSE(p.grid);
  CHECK(p.series().order() == 3);
  CHECK(p.summed_beta() == -0.5);

  const auto q = parse_problem(
      "beta = 1/3\ncoefficient = 1/2\ncoefficient = 3/4\ncoefficient = -21/8\n"
      "kind = frac-integral, borel-leroy\ncriterion = lasso1,ridge\ngrid = -2:0:21\nk = 1\n");
  CHECK(q.summed_beta() == doctest::Approx(1.0 / 3.0));
  CHECK(q.series() == TruncatedSeries{0.5, 0.75});
  REQUIRE(q.kinds.size() == 2);
  CHECK(q.kinds[0] == TransformKind::FractionalIntegral);
  REQUIRE(q.methods.size() == 2);
  CHECK(q.methods[1] == Method::Ridge);
  REQUIRE(q.grid);
  CHECK(q.grid->points() == 21);

  const auto idx = parse_problem("beta = -1\nquantity = index\ncoefficient = 1\n"
                                 "coefficient = 2\ncoefficient = 1\n");
  CHECK(idx.quantity == Quantity::Index);
  CHECK(idx.series().order() == 1);
}

TEST_CASE("problem file round trip") {
  const auto p = parse_problem(
      "name = t\nbeta = 0.4\ncoefficient = 3/2\ncoefficient = 0.552721e-4\n"
      "kind = mittag-leffler\ncriterion = genlass2\ngrid = -1:2:31\nk = 1\n");
  const auto q = parse_problem(format_problem(p));
  CHECK(q.name == p.name);
  CHECK(q.beta == p.beta);
  CHECK(q.coefficients == p.coefficients);
  CHECK(q.kinds == p.kinds);
  CHECK(q.methods == p.methods);
  CHECK(q.grid->lo() == p.grid->lo());
  CHECK(q.grid->points() == p.grid->points());
  CHECK(q.k == p.k);
  CHECK(format_problem(q) == format_problem(p));
}

TEST_CASE("problem file errors carry line and column") {
  auto fails_at = [](const std::string& text, int line) {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() >= 1);
      return;
    }
    FAIL("no ParseError for: " << text);
  };
  fails_at("beta = 1\ncoefficient = 1\ncolour = red\n", 3);
  fails_at("beta = 1\nbeta = 2\ncoefficient = 1\n", 2);
  fails_at("beta = 1\ncoefficient = x1\n", 2);
  fails_at("beta = 1\ncoefficient = 1\nkind = laplace\n", 3);
  fails_at("beta = 1\nno equals sign\n", 2);
  fails_at("coefficient = 1\ncoefficient = 2\n", 3);
  fails_at("beta = 1\n", 2);
  CHECK(parse_kinds("all").size() == 4);
  CHECK(parse_methods("all").size() == 5);
  CHECK_THROWS(parse_methods("lasso1,nope"));
}

TEST_CASE("sum reports the selected amplitude") {
  TempDir tmp;
  const auto file = tmp.write("ad.txt", kAnomalous);
  const auto r = run_cli({"sum", file.string(), "--kind", "frac-integral"});
  CHECK(r.code == kOk);
  std::istringstream in(r.out);
  std::string line;
  bool found = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string method, eq, b;
    double value = 0.0;
    ls >> method >> b >> eq >> value;
    if (method == "genlass1" && b == "B") {
      CHECK(value == doctest::Approx(2.0488).epsilon(5e-4));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("exit codes") {
  TempDir tmp;
  SUBCASE("single coefficient") {
    const auto f = tmp.write("one.txt", "beta = 1\ncoefficient = 1\n");
    const auto r = run_cli({"sum", f.string()});
    CHECK(r.code == kNoDefinedResult);
    CHECK(r.err.find("order too low") != std::string::npos);
  }
  SUBCASE("missing beta") {
    const auto f = tmp.write("nb.txt", "coefficient = 1\ncoefficient = 2\n");
    const auto r = run_cli({"sum", f.string()});
    CHECK(r.code == kInputError);
    CHECK(r.err.find(":3:") != std::string::npos);
  }
  SUBCASE("missing file") {
    CHECK(run_cli({"sum", (tmp.path / "absent.txt").string()}).code == kInputError);
  }
  SUBCASE("bad flags") {
    const auto f = tmp.write("ad.txt", kAnomalous);
    CHECK(run_cli({"sum", f.string(), "--kind", "laplace"}).code == kInputError);
    CHECK(run_cli({"sum", f.string(), "--grid", "1:0:5"}).code == kInputError);
    CHECK(run_cli({"sum", f.string(), "--format", "xml"}).code == kInputError);
    CHECK(run_cli({"bench", "--table", "99"}).code == kInputError);
    CHECK(run_cli({"frobnicate"}).code == kInputError);
  }
  SUBCASE("help") { CHECK(run_cli({"--help"}).code == kOk); }
}

TEST_CASE("RESUM_GRID") {
  Options opt;
  ::setenv("RESUM_GRID", "-2:0:41", 1);
  auto g = resolve_grid(opt, nullptr);
  REQUIRE(g);
  CHECK(g->points() == 41);
  const auto file = parse_problem("beta = 1\ncoefficient = 1\ncoefficient = 1\ngrid = -1:0:11\n");
  CHECK(resolve_grid(opt, &file)->points() == 11);
  opt.grid = numerics::ScanGrid(-3.0, 0.0, 7);
  CHECK(resolve_grid(opt, &file)->points() == 7);
  ::setenv("RESUM_GRID", "garbage", 1);
  CHECK(run_cli({"bench", "--table", "3"}).code == kInputError);
  ::unsetenv("RESUM_GRID");
  CHECK_FALSE(resolve_grid(Options{}, nullptr));
}

TEST_CASE("json and csv carry identical numbers") {
  TempDir tmp;
  const auto f = tmp.write("ad.txt", kAnomalous);
  const auto js = run_cli({"sum", f.string(), "--format", "json"});
  const auto cs = run_cli({"sum", f.string(), "--format", "csv"});
  REQUIRE(js.code == kOk);
  REQUIRE(cs.code == kOk);

  std::map<std::string, std::pair<double, double>> from_csv;
  for (const auto& row : csv_rows(cs.out)) {
    if (row.size() < 6 || row[0] != "row" || row[3] == "undefined") continue;
    from_csv[row[1] + "/" + row[2]] = {std::stod(row[4]), std::stod(row[5])};
  }
  const auto doc = nlohmann::json::parse(js.out);
  int compared = 0;
  for (const auto& kind : doc.at("kinds")) {
    for (const auto& row : kind.at("rows")) {
      if (row.at("status") == "undefined") continue;
      const std::string key =
          kind.at("kind").get<std::string>() + "/" + row.at("method").get<std::string>();
      REQUIRE(from_csv.count(key) == 1);
      CHECK(row.at("u").get<double>() == from_csv[key].first);
      CHECK(row.at("amplitude").get<double>() == from_csv[key].second);
      CHECK(row.at("raw").at("amplitude").is_number());
      ++compared;
    }
  }
  CHECK(compared == static_cast<int>(from_csv.size()));
  CHECK(compared > 0);
}

TEST_CASE("bench is idempotent") {
  TempDir tmp;
  const auto dir = (tmp.path / "out").string();
  const auto a = run_cli({"bench", "--table", "3", "--out", dir});
  REQUIRE(a.code == kOk);
  const std::string first = slurp(fs::path(dir) / "table_03.csv");
  const std::string summary = slurp(fs::path(dir) / "summary.csv");
  CHECK_FALSE(first.empty());
  const auto b = run_cli({"bench", "--table", "3", "--out", dir});
  REQUIRE(b.code == kOk);
  CHECK(slurp(fs::path(dir) / "table_03.csv") == first);
  CHECK(slurp(fs::path(dir) / "summary.csv") == summary);
  CHECK(a.out == b.out);
}

TEST_CASE("bench marks unreproducible tables") {
  TempDir tmp;
  const auto r = run_cli({"bench", "--table", "1", "--out", (tmp.path / "o").string()});
  CHECK(r.code == kOk);
  CHECK(r.out.find("not reproducible: coefficients unavailable") != std::string::npos);
}

TEST_CASE("scan") {
  TempDir tmp;
  SUBCASE("two grid points give two rows") {
    const auto f = tmp.write("ad.txt", kAnomalous);
    const auto r = run_cli({"scan", f.string(), "--kind", "frac-integral", "--grid", "-3:-1:2",
                            "--format", "csv"});
    REQUIRE(r.code == kOk);
    const auto rows = csv_rows(r.out);
    CHECK(rows.size() == 3);  // header + 2
  }
  SUBCASE("constant series is flat") {
    const auto f = tmp.write("c.txt", "beta = 0\ncoefficient = 2.5\ncoefficient = 0\n");
    const auto r = run_cli({"scan", f.string(), "--kind", "borel-leroy", "--grid", "0:2:9",
                            "--format", "csv"});
    REQUIRE(r.code == kOk);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][2]) == 2.5);
  }
  SUBCASE("anomalous dimension difference changes sign near the printed roots") {
    const auto f = tmp.write("ad.txt", kAnomalous);
    const auto r = run_cli({"scan", f.string(), "--kind", "frac-integral", "--grid",
                            "-3:-0.5:251", "--format", "csv"});
    REQUIRE(r.code == kOk);
    const auto rows = csv_rows(r.out);
    std::vector<double> changes;
    double prev_u = 0.0, prev_d = 0.0;
    bool have = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].size() < 4 || rows[i][2].empty() || rows[i][3].empty()) {
        have = false;
        continue;
      }
      const double u = std::stod(rows[i][1]);
      const double d = std::stod(rows[i][3]) - std::stod(rows[i][2]);
      if (have && (d < 0.0) != (prev_d < 0.0)) changes.push_back(0.5 * (u + prev_u));
      prev_u = u;
      prev_d = d;
      have = true;
    }
    REQUIRE(changes.size() == 2);
    CHECK(std::abs(changes[0] + 2.58) < 0.02);
    CHECK(std::abs(changes[1] + 0.78) < 0.02);
  }
  SUBCASE("--out writes the report") {
    const auto f = tmp.write("ad.txt", kAnomalous);
    const auto dir = tmp.path / "scan";
    const auto r = run_cli({"scan", f.string(), "--kind", "frac-integral", "--grid", "-3:-1:5",
                            "--format", "csv", "--out", dir.string()});
    REQUIRE(r.code == kOk);
    CHECK(fs::exists(dir / "scan.csv"));
  }
}

}
