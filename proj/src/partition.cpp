#include "pfsign/partition.hpp"

#include <string>

#include "pfsign/errors.hpp"

namespace pfsign {

KernelKind reciprocal_kind(KernelKind kind) {
  switch (kind) {
    case KernelKind::Q: return KernelKind::QStar;
    case KernelKind::QStar: return KernelKind::Q;
    case KernelKind::PStar: return KernelKind::P;
    case KernelKind::P: return KernelKind::PStar;
  }
  return kind;
}

std::string_view kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::Q: return "q";
    case KernelKind::QStar: return "qstar";
    case KernelKind::PStar: return "pstar";
    case KernelKind::P: return "p";
  }
  return "?";
}

std::optional<KernelKind> parse_kernel_kind(std::string_view name) {
  for (KernelKind k : kAllKernels)
    if (kernel_name(k) == name) return k;
  return std::nullopt;
}

int encoding_index(KernelKind kind) { return static_cast<int>(kind) + 1; }

SeriesCoefficients::SeriesCoefficients(std::vector<BigInt> coeffs, std::optional<KernelKind> kind)
    : coeffs_(std::move(coeffs)), kind_(kind) {
  if (coeffs_.empty()) throw ShapeError("power series needs a constant term");
}

SeriesCoefficients SeriesCoefficients::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw ShapeError("cannot extend a series of order " + std::to_string(this->order()) +
                     " to order " + std::to_string(order));
  }
  return SeriesCoefficients({coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1},
                            kind_);
}

namespace {

// prod_{m=1..N} (1 + sign * q^m) mod q^{N+1}. Factor m leaves coefficients
// below m untouched, so stopping at N is exact.
std::vector<BigInt> signed_product(std::size_t order, int sign) {
  std::vector<BigInt> a(order + 1, 0);
  a[0] = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    for (std::size_t i = order; i >= m; --i) {
      if (sign > 0) a[i] += a[i - m];
      else a[i] -= a[i - m];
    }
  }
  return a;
}

}  // namespace

SeriesCoefficients series_reciprocal(const SeriesCoefficients& a) {
  const BigInt& lead = a[0];
  if (lead != 1 && lead != -1) {
    throw NonUnitLeadingCoefficient("constant term " + lead.get_str() + " is not +1 or -1");
  }
  const std::size_t order = a.order();
  std::vector<std::size_t> support;  // nonzero a(j), j >= 1
  for (std::size_t j = 1; j <= order; ++j)
    if (a[j] != 0) support.push_back(j);

  std::vector<BigInt> b(order + 1, 0);
  b[0] = lead;
  BigInt acc;
  for (std::size_t n = 1; n <= order; ++n) {
    acc = 0;
    for (std::size_t j : support) {
      if (j > n) break;
      add_product(acc, a[j], b[n - j]);
    }
    b[n] = -lead * acc;
  }
  std::optional<KernelKind> kind;
  if (a.kind()) kind = reciprocal_kind(*a.kind());
  return SeriesCoefficients(std::move(b), kind);
}

SeriesCoefficients kernel_coefficients(KernelKind kind, std::size_t order) {
  switch (kind) {
    case KernelKind::Q: return SeriesCoefficients(signed_product(order, +1), kind);
    case KernelKind::PStar: return SeriesCoefficients(signed_product(order, -1), kind);
    case KernelKind::QStar:
      return series_reciprocal(SeriesCoefficients(signed_product(order, +1), KernelKind::Q));
    case KernelKind::P:
      return series_reciprocal(SeriesCoefficients(signed_product(order, -1), KernelKind::PStar));
  }
  throw UnsupportedKind("unknown kernel kind");
}

SeriesCoefficients p_pentagonal_recurrence(std::size_t order) {
  // p*(j) is (-1)^k at the generalized pentagonal numbers j = k(3k -+ 1)/2
  // and zero elsewhere, so p(n) = -sum_{j>=1} p*(j) p(n - j) is a sparse sum.
  std::vector<std::pair<std::size_t, int>> pentagonal;
  for (std::size_t k = 1;; ++k) {
    const std::size_t lo = k * (3 * k - 1) / 2;
    if (lo > order) break;
    const int sign = k % 2 == 1 ? -1 : 1;
    pentagonal.emplace_back(lo, sign);
    const std::size_t hi = k * (3 * k + 1) / 2;
    if (hi <= order) pentagonal.emplace_back(hi, sign);
  }

  std::vector<BigInt> p(order + 1, 0);
  p[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    BigInt& value = p[n];
    for (const auto& [j, sign] : pentagonal) {
      if (j > n) break;
      if (sign < 0) value += p[n - j];
      else value -= p[n - j];
    }
  }
  return SeriesCoefficients(std::move(p), KernelKind::P);
}

SeriesCoefficients cauchy_product(const SeriesCoefficients& a, const SeriesCoefficients& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<BigInt> c(order + 1, 0);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) add_product(c[i + j], a[i], b[j]);
  }
  return SeriesCoefficients(std::move(c));
}

std::shared_ptr<const SeriesCoefficients> KernelCache::get(KernelKind kind, std::size_t order) {
  std::lock_guard lock(mutex_);
  const auto key = std::make_pair(kind, order);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;

  std::shared_ptr<const SeriesCoefficients> entry;
  auto longer = entries_.lower_bound(key);
  if (longer != entries_.end() && longer->first.first == kind) {
    entry = std::make_shared<const SeriesCoefficients>(longer->second->truncated(order));
  } else {
    entry = std::make_shared<const SeriesCoefficients>(kernel_coefficients(kind, order));
  }
  entries_.emplace(key, entry);
  return entry;
}

KernelCache& KernelCache::global() {
  static KernelCache cache;
  return cache;
}

}  // namespace pfsign
