#include "pfsign/render.hpp"

#include <cctype>
#include <sstream>

#include "pfsign/errors.hpp"

namespace pfsign {

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "md") return OutputFormat::Markdown;
  if (name == "tex") return OutputFormat::Latex;
  return std::nullopt;
}

namespace {

void join(std::ostringstream& out, const std::vector<std::string>& cells, std::string_view sep) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << sep;
    out << cells[i];
  }
}

bool looks_numeric(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.' ||
          c == 'e' || c == 'E'))
      return false;
  return true;
}

std::string escape_latex(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_csv(const TextTable& t) {
  std::ostringstream out;
  join(out, t.header, ",");
  out << '\n';
  for (const auto& row : t.rows) {
    join(out, row, ",");
    out << '\n';
  }
  return out.str();
}

std::string render_markdown(const TextTable& t) {
  std::ostringstream out;
  out << "| ";
  join(out, t.header, " | ");
  out << " |\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& row : t.rows) {
    out << "| ";
    join(out, row, " | ");
    out << " |\n";
  }
  return out.str();
}

std::string render_latex(const TextTable& t, std::string_view column_spec,
                         const std::vector<std::string>* latex_header) {
  std::string spec(column_spec);
  if (spec.empty()) {
    spec = "|";
    for (std::size_t i = 0; i < t.header.size(); ++i) spec += "l|";
  }
  std::ostringstream out;
  out << "\\begin{tabular}{" << spec << "} \\hline\n";
  if (latex_header != nullptr) {
    join(out, *latex_header, " & ");
  } else {
    std::vector<std::string> escaped;
    for (const auto& h : t.header) escaped.push_back(escape_latex(h));
    join(out, escaped, " & ");
  }
  out << " \\\\ \\hline\n";
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(looks_numeric(c) ? "$" + c + "$" : escape_latex(c));
    join(out, cells, " & ");
    out << " \\\\ \\hline\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

std::string render(const TextTable& t, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return render_csv(t);
    case OutputFormat::Markdown: return render_markdown(t);
    case OutputFormat::Latex: return render_latex(t);
  }
  return {};
}

TextTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::vector<std::string> cells;
    std::string_view line = text.substr(start, end - start);
    std::size_t cell_start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', cell_start);
      cells.emplace_back(line.substr(cell_start, comma - cell_start));
      if (comma == std::string_view::npos) break;
      cell_start = comma + 1;
    }
    lines.push_back(std::move(cells));
    start = end + 1;
  }
  if (lines.empty()) throw ShapeError("empty CSV");

  TextTable t;
  t.header = std::move(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != t.header.size()) {
      throw ShapeError("CSV row " + std::to_string(i) + " has " + std::to_string(lines[i].size()) +
                       " cells, header has " + std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(lines[i]));
  }
  return t;
}

TextTable to_text_table(const TableArtifact& table) {
  TextTable t;
  for (auto name : kTableColumns) t.header.emplace_back(name);
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    for (const auto& cell : row) cells.push_back(cell.value.get_str());
    t.rows.push_back(std::move(cells));
  }
  return t;
}

std::string render_table_artifact(const TableArtifact& table, OutputFormat format) {
  const TextTable t = to_text_table(table);
  if (format != OutputFormat::Latex) return render(t, format);
  static const std::vector<std::string> header = {
      "$n$",           "$f(n)$",           "$c_1[f](n)$",      "$c_2[f](n)$",
      "$c_3[f](n)$",   "$c_4[f](n)$",      "$f^{-1}(n)$",      "$c_1[f^{-1}](n)$",
      "$c_2[f^{-1}](n)$", "$c_3[f^{-1}](n)$", "$c_4[f^{-1}](n)$"};
  return render_latex(t, "|l||l|l|l|l|l||l|l|l|l|l|", &header);
}

}  // namespace pfsign
