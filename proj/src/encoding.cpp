#include "pfsign/encoding.hpp"

#include <string>

#include "pfsign/errors.hpp"

namespace pfsign {

EncodedSequence encode(const ArithmeticSequence& f, const SeriesCoefficients& kernel,
                       KernelKind kind) {
  const std::size_t n = f.size();
  if (kernel.order() + 1 < n) {
    throw ShapeError("kernel of order " + std::to_string(kernel.order()) +
                     " too short for a sequence of length " + std::to_string(n));
  }
  // c(m) = sum_t kernel(t) f(m - t); only the kernel's nonzero terms matter,
  // which makes the sparse p* kernel cheap.
  std::vector<std::size_t> support;
  for (std::size_t t = 0; t < n; ++t)
    if (kernel[t] != 0) support.push_back(t);

  std::vector<BigInt> out(n, 0);
  for (std::size_t m = 1; m <= n; ++m) {
    BigInt& acc = out[m - 1];
    for (std::size_t t : support) {
      if (t >= m) break;
      add_product(acc, kernel[t], f(m - t));
    }
  }
  std::string label = "c" + std::to_string(encoding_index(kind)) + "[" + f.name() + "]";
  return {ArithmeticSequence(std::move(out), label), f.name(), kind};
}

EncodedSequence encode(const ArithmeticSequence& f, KernelKind kind) {
  const auto kernel = KernelCache::global().get(kind, f.size() - 1);
  return encode(f, *kernel, kind);
}

ArithmeticSequence decode(const EncodedSequence& c) {
  const KernelKind inverse = reciprocal_kind(c.kernel);
  const auto kernel = KernelCache::global().get(inverse, c.values.size() - 1);
  return encode(c.values, *kernel, inverse).values.renamed(c.source_name);
}

std::vector<CellMismatch> TableArtifact::mismatches() const {
  std::vector<CellMismatch> out;
  for (const auto& row : rows) {
    for (std::size_t col = 0; col < kTableColumnCount; ++col) {
      const TableCell& cell = row[col];
      if (cell.status != CellStatus::Mismatch) continue;
      const std::string column(kTableColumns[col]);
      out.push_back({row[0].value.get_ui(), column, cell.value, *cell.golden,
                     known_discrepant.contains(column)});
    }
  }
  return out;
}

bool TableArtifact::golden_ok() const {
  for (const auto& m : mismatches())
    if (!m.known_discrepant) return false;
  return true;
}

bool TableArtifact::has_golden() const {
  for (const auto& row : rows)
    for (const auto& cell : row)
      if (cell.status != CellStatus::NoGolden) return true;
  return false;
}

TableArtifact experiment_table(std::string_view name, std::size_t n, const GoldenTable* golden) {
  const ArithmeticSequence f = registry_lookup(name, n);
  require_unit_leading(f);
  const ArithmeticSequence finv = dirichlet_inverse_recursive(f);

  std::array<EncodedSequence, 4> cf{encode(f, KernelKind::Q), encode(f, KernelKind::QStar),
                                    encode(f, KernelKind::PStar), encode(f, KernelKind::P)};
  std::array<EncodedSequence, 4> cinv{encode(finv, KernelKind::Q), encode(finv, KernelKind::QStar),
                                      encode(finv, KernelKind::PStar), encode(finv, KernelKind::P)};

  TableArtifact table;
  table.function_name = std::string(name);
  if (golden != nullptr) {
    table.table_id = golden->id;
    table.known_discrepant = golden->known_discrepant;
  } else {
    table.table_id = table_for_function(name);
  }

  for (std::size_t i = 1; i <= n; ++i) {
    std::array<TableCell, kTableColumnCount> row;
    row[0].value = static_cast<unsigned long>(i);
    row[1].value = f(i);
    for (std::size_t k = 0; k < 4; ++k) row[2 + k].value = cf[k].values(i);
    row[6].value = finv(i);
    for (std::size_t k = 0; k < 4; ++k) row[7 + k].value = cinv[k].values(i);

    if (golden != nullptr && i <= golden->rows.size()) {
      const TableRow& expected = golden->rows[i - 1];
      for (std::size_t col = 0; col < kTableColumnCount; ++col) {
        row[col].golden = expected[col];
        row[col].status = expected[col] == row[col].value ? CellStatus::Match : CellStatus::Mismatch;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace pfsign
