#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pfsign/arith.hpp"
#include "pfsign/partition.hpp"

namespace pfsign {

/// c_k[f] for one kernel. values(1) equals f(1) because every kernel starts at 1.
struct EncodedSequence {
  ArithmeticSequence values;
  std::string source_name;
  KernelKind kernel;
};

/// c[f](n) = sum_{j=1..n} f(j) kernel(n - j).
EncodedSequence encode(const ArithmeticSequence& f, KernelKind kind);
/// Same with an explicit kernel prefix; its order must be at least N - 1.
EncodedSequence encode(const ArithmeticSequence& f, const SeriesCoefficients& kernel,
                       KernelKind kind);

/// Inverts encode by convolving with the reciprocal kernel.
ArithmeticSequence decode(const EncodedSequence& c);

// Appendix-style tables -----------------------------------------------------

inline constexpr std::size_t kTableColumnCount = 11;
inline constexpr std::array<std::string_view, kTableColumnCount> kTableColumns = {
    "n", "f", "c1_f", "c2_f", "c3_f", "c4_f", "finv", "c1_finv", "c2_finv", "c3_finv", "c4_finv"};

using TableRow = std::array<BigInt, kTableColumnCount>;

/// Transcribed appendix table.
struct GoldenTable {
  int id = 0;
  std::string function_name;
  std::vector<TableRow> rows;
  std::set<std::string> known_discrepant;  // column names
};

/// 1 -> phi, 2 -> divisor_count, ..., 6 -> partition_seq.
std::optional<std::string_view> table_function(int id);
std::optional<int> table_for_function(std::string_view name);

std::filesystem::path default_fixtures_dir();
/// Reads table<id>.csv and known_discrepant.txt from dir. Throws Error on
/// missing or malformed files.
GoldenTable load_golden(const std::filesystem::path& dir, int id);

enum class CellStatus { Match, Mismatch, NoGolden };

struct TableCell {
  BigInt value;
  CellStatus status = CellStatus::NoGolden;
  std::optional<BigInt> golden;
};

struct CellMismatch {
  std::size_t n = 0;
  std::string column;
  BigInt computed;
  BigInt golden;
  bool known_discrepant = false;
};

struct TableArtifact {
  std::string function_name;
  std::optional<int> table_id;
  std::vector<std::array<TableCell, kTableColumnCount>> rows;
  std::set<std::string> known_discrepant;

  std::vector<CellMismatch> mismatches() const;
  /// No mismatch outside the known-discrepant columns.
  bool golden_ok() const;
  bool has_golden() const;
};

/// Builds the 11-column table for a registry function from the definitions
/// and, when golden is given, grades every cell it covers.
TableArtifact experiment_table(std::string_view name, std::size_t n,
                               const GoldenTable* golden = nullptr);

}  // namespace pfsign
