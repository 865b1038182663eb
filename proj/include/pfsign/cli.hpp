#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pfsign/render.hpp"

namespace pfsign {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::size_t truncation_n = 2048;  // >= 16
  OutputFormat output_format = OutputFormat::Csv;
  std::optional<std::filesystem::path> output_path;
  std::filesystem::path fixtures_dir;
};

/// Runs the pfsign command line. args excludes the program name. Report
/// output goes to out (or --out), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfsign
