#include <array>
#include <fstream>
#include <sstream>
#include <string>

#include "pfsign/encoding.hpp"
#include "pfsign/errors.hpp"
#include "pfsign/render.hpp"

#ifndef PFSIGN_FIXTURES_DIR
#define PFSIGN_FIXTURES_DIR "fixtures"
#endif

namespace pfsign {

namespace {

constexpr std::array<std::string_view, 6> kTableFunctions = {
    "phi", "divisor_count", "omega_plus_one", "double_factorial_odd", "qstar_seq",
    "partition_seq"};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::optional<std::string_view> table_function(int id) {
  if (id < 1 || id > static_cast<int>(kTableFunctions.size())) return std::nullopt;
  return kTableFunctions[static_cast<std::size_t>(id - 1)];
}

std::optional<int> table_for_function(std::string_view name) {
  for (std::size_t i = 0; i < kTableFunctions.size(); ++i)
    if (kTableFunctions[i] == name) return static_cast<int>(i + 1);
  return std::nullopt;
}

std::filesystem::path default_fixtures_dir() { return PFSIGN_FIXTURES_DIR; }

GoldenTable load_golden(const std::filesystem::path& dir, int id) {
  const auto function = table_function(id);
  if (!function) throw NameError("no appendix table " + std::to_string(id));

  const auto path = dir / ("table" + std::to_string(id) + ".csv");
  const TextTable csv = parse_csv(read_file(path));
  if (csv.header.size() != kTableColumnCount) {
    throw ShapeError(path.string() + ": expected " + std::to_string(kTableColumnCount) +
                     " columns");
  }
  for (std::size_t c = 0; c < kTableColumnCount; ++c) {
    if (csv.header[c] != kTableColumns[c]) {
      throw ShapeError(path.string() + ": unexpected column '" + csv.header[c] + "'");
    }
  }

  GoldenTable golden;
  golden.id = id;
  golden.function_name = std::string(*function);
  for (const auto& cells : csv.rows) {
    TableRow row;
    for (std::size_t c = 0; c < kTableColumnCount; ++c) {
      if (row[c].set_str(cells[c], 10) != 0) {
        throw ShapeError(path.string() + ": non-integer cell '" + cells[c] + "'");
      }
    }
    if (row[0] != static_cast<unsigned long>(golden.rows.size() + 1)) {
      throw ShapeError(path.string() + ": rows must run n = 1, 2, ...");
    }
    golden.rows.push_back(std::move(row));
  }

  const auto flags = dir / "known_discrepant.txt";
  if (std::filesystem::exists(flags)) {
    std::istringstream lines(read_file(flags));
    for (std::string line; std::getline(lines, line);) {
      if (line.empty() || line.front() == '#') continue;
      golden.known_discrepant.insert(line);
    }
  }
  return golden;
}

}  // namespace pfsign
