#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfsign/encoding.hpp"

namespace pfsign {

enum class OutputFormat { Csv, Markdown, Latex };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Header plus string cells; the common shape of every report.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const TextTable&, const TextTable&) = default;
};

/// CSV: comma separated, header row, LF endings, no quoting.
std::string render_csv(const TextTable& t);
std::string render_markdown(const TextTable& t);
/// `column_spec` defaults to |l|l|...| with one l per column.
std::string render_latex(const TextTable& t, std::string_view column_spec = {},
                         const std::vector<std::string>* latex_header = nullptr);
std::string render(const TextTable& t, OutputFormat format);

/// Inverse of render_csv. Throws ShapeError on ragged rows or empty input.
TextTable parse_csv(std::string_view text);

TextTable to_text_table(const TableArtifact& table);
/// Appendix layout for LaTeX (|l||l|l|l|l|l||l|l|l|l|l| with math headers).
std::string render_table_artifact(const TableArtifact& table, OutputFormat format);

}  // namespace pfsign
