#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "pfsign/bigint.hpp"

namespace pfsign {

/// The four partition kernels. Q and QStar are Cauchy reciprocals of each
/// other, as are PStar and P. Declaration order follows c1..c4.
enum class KernelKind { Q, QStar, PStar, P };

inline constexpr KernelKind kAllKernels[] = {KernelKind::Q, KernelKind::QStar,
                                             KernelKind::PStar, KernelKind::P};

KernelKind reciprocal_kind(KernelKind kind);
/// "q", "qstar", "pstar", "p".
std::string_view kernel_name(KernelKind kind);
std::optional<KernelKind> parse_kernel_kind(std::string_view name);
/// 1 for Q through 4 for P, the index of the encoding c_k using this kernel.
int encoding_index(KernelKind kind);

/// Coefficients a(0), ..., a(N) of a truncated power series.
class SeriesCoefficients {
 public:
  explicit SeriesCoefficients(std::vector<BigInt> coeffs,
                              std::optional<KernelKind> kind = std::nullopt);

  std::size_t size() const { return coeffs_.size(); }
  /// Truncation order N (index of the last stored coefficient).
  std::size_t order() const { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  std::optional<KernelKind> kind() const { return kind_; }

  SeriesCoefficients truncated(std::size_t order) const;

  friend bool operator==(const SeriesCoefficients& a, const SeriesCoefficients& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<BigInt> coeffs_;
  std::optional<KernelKind> kind_;
};

inline constexpr std::size_t kDefaultTruncation = 2048;

/// Exact coefficients 0..N by truncated product expansion. Q and PStar come
/// from expanding prod (1 +- q^m) for m = 1..N; QStar and P are the series
/// reciprocals of those products.
SeriesCoefficients kernel_coefficients(KernelKind kind, std::size_t order);

/// p(0..N) from the sparse pentagonal relation sum_j p*(j) p(n - j) = 0.
SeriesCoefficients p_pentagonal_recurrence(std::size_t order);

/// b with a * b = 1 through order N. Requires a(0) = +-1.
SeriesCoefficients series_reciprocal(const SeriesCoefficients& a);

/// Truncated Cauchy product to the shorter of the two orders.
SeriesCoefficients cauchy_product(const SeriesCoefficients& a, const SeriesCoefficients& b);

/// Shared, thread-safe memo of kernel prefixes keyed by (kind, order).
class KernelCache {
 public:
  std::shared_ptr<const SeriesCoefficients> get(KernelKind kind, std::size_t order);

  static KernelCache& global();

 private:
  std::mutex mutex_;
  std::map<std::pair<KernelKind, std::size_t>, std::shared_ptr<const SeriesCoefficients>>
      entries_;
};

// Asymptotics ---------------------------------------------------------------

enum class FormulaVariant { AsPrinted, StandardLiterature };

std::string_view variant_name(FormulaVariant variant);
std::optional<FormulaVariant> parse_variant(std::string_view name);

struct AsymptoticReport {
  KernelKind kind = KernelKind::P;
  FormulaVariant variant = FormulaVariant::StandardLiterature;
  std::size_t n = 0;
  BigInt exact_value;
  double estimate = 0.0;
  double ratio = 0.0;           // exact / estimate
  double fitted_constant = 0.0; // exact / (estimate / formula_constant)
  double formula_constant = 0.0;
};

/// Leading-term estimate C * (+-1)^n * exp(k sqrt n) / n^a for Q, QStar or P.
/// PStar has no such formula and raises UnsupportedKind.
AsymptoticReport asymptotic_estimate(KernelKind kind, std::size_t n, FormulaVariant variant);

/// Same, reusing a caller-provided exact coefficient instead of recomputing.
AsymptoticReport asymptotic_estimate(KernelKind kind, std::size_t n, FormulaVariant variant,
                                     const BigInt& exact_value);

}  // namespace pfsign
