#include "problem_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "format.hpp"
#include "resum/difflog.hpp"

namespace resum::cli {
namespace {

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (lead) *lead = a;
  return s.substr(a, b - a);
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<TransformKind> parse_kinds(std::string_view text) {
  std::vector<TransformKind> out;
  for (auto item : split_commas(text)) {
    if (item == "all") {
      for (TransformKind k : kAllKinds)
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
      continue;
    }
    const TransformKind k = parse_kind(item);
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  return out;
}

std::vector<Method> parse_methods(std::string_view text) {
  std::vector<Method> out;
  for (auto item : split_commas(text)) {
    if (item == "all") {
      for (Method m : kAllMethods)
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
      continue;
    }
    const Method m = parse_method(item);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

TruncatedSeries ProblemFile::series() const {
  std::vector<double> c;
  for (const auto& text : coefficients) c.push_back(benchmarks::parse_printed(text));
  TruncatedSeries s(std::move(c));
  if (k) s = s.truncated(std::min(*k, s.order()));
  return quantity == Quantity::Index ? difflog::index_series(s) : s;
}

double ProblemFile::summed_beta() const {
  return quantity == Quantity::Index ? difflog::kIndexExponent
                                     : benchmarks::parse_printed(beta);
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile p;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t lead = 0;
    if (trim(line, &lead).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(line_no, static_cast<int>(lead) + 1, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    std::size_t vlead = 0;
    const std::string_view value = trim(line.substr(eq + 1), &vlead);
    const int vcol = static_cast<int>(eq + 1 + vlead) + 1;
    auto fail = [&](const std::string& what) -> ParseError {
      return ParseError(line_no, vcol, what);
    };

    if (key != "coefficient" && !seen.insert(key).second)
      throw ParseError(line_no, static_cast<int>(lead) + 1, "duplicate key '" + key + "'");
    if (value.empty()) throw fail("missing value for '" + key + "'");

    try {
      if (key == "name") {
        p.name = value;
      } else if (key == "beta") {
        benchmarks::parse_printed(value);
        p.beta = value;
      } else if (key == "coefficient") {
        benchmarks::parse_printed(value);
        p.coefficients.emplace_back(value);
      } else if (key == "kind") {
        p.kinds = parse_kinds(value);
      } else if (key == "criterion") {
        p.methods = parse_methods(value);
      } else if (key == "grid") {
        p.grid = numerics::ScanGrid::parse(std::string(value));
      } else if (key == "k") {
        int k = 0;
        const auto r = std::from_chars(value.data(), value.data() + value.size(), k);
        if (r.ec != std::errc() || r.ptr != value.data() + value.size() || k < 1)
          throw fail("k must be a positive integer");
        p.k = k;
      } else if (key == "quantity") {
        if (value == "amplitude") p.quantity = Quantity::Amplitude;
        else if (value == "index") p.quantity = Quantity::Index;
        else throw fail("quantity must be amplitude or index");
      } else {
        throw ParseError(line_no, static_cast<int>(lead) + 1, "unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
  }

  const int end_line = line_no;
  if (p.beta.empty() && p.quantity == Quantity::Amplitude)
    throw ParseError(end_line, 1, "missing required key 'beta'");
  if (p.coefficients.empty()) throw ParseError(end_line, 1, "no coefficient lines");
  return p;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string format_problem(const ProblemFile& p) {
  std::ostringstream out;
  if (!p.name.empty()) out << "name = " << p.name << '\n';
  if (!p.beta.empty()) out << "beta = " << p.beta << '\n';
  if (p.quantity == Quantity::Index) out << "quantity = index\n";
  if (p.k) out << "k = " << *p.k << '\n';
  if (p.grid) {
    out << "grid = " << shortest(p.grid->lo()) << ':' << shortest(p.grid->hi()) << ':'
        << p.grid->points() << '\n';
  }
  auto join = [&](const auto& items) {
    for (std::size_t i = 0; i < items.size(); ++i) out << (i ? ", " : "") << to_string(items[i]);
    out << '\n';
  };
  if (!p.kinds.empty()) {
    out << "kind = ";
    join(p.kinds);
  }
  if (!p.methods.empty()) {
    out << "criterion = ";
    join(p.methods);
  }
  for (const auto& c : p.coefficients) out << "coefficient = " << c << '\n';
  return out.str();
}

}  // namespace resum::cli
