#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "problem_file.hpp"

namespace resum::cli {

enum ExitCode : int { kOk = 0, kToleranceFailure = 1, kInputError = 2, kNoDefinedResult = 3 };

enum class Format { Text, Json, Csv };

struct Options {
  std::vector<TransformKind> kinds;  // empty: from the problem file, else every kind
  std::vector<Method> methods;
  std::optional<numerics::ScanGrid> grid;
  Format format = Format::Text;
  std::vector<int> tables;  // empty: every stored table
  std::optional<std::filesystem::path> out;
};

/// --grid, then the problem file, then RESUM_GRID; nullopt leaves the per-kind windows.
std::optional<numerics::ScanGrid> resolve_grid(const Options& opt, const ProblemFile* file);

int cmd_sum(const ProblemFile& file, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_scan(const ProblemFile& file, const Options& opt, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace resum::cli
