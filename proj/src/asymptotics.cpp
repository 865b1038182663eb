#include <cmath>
#include <numbers>
#include <string>

#include "pfsign/errors.hpp"
#include "pfsign/partition.hpp"

namespace pfsign {

std::string_view variant_name(FormulaVariant variant) {
  return variant == FormulaVariant::AsPrinted ? "as-printed" : "standard-literature";
}

std::optional<FormulaVariant> parse_variant(std::string_view name) {
  if (name == "as-printed") return FormulaVariant::AsPrinted;
  if (name == "standard-literature") return FormulaVariant::StandardLiterature;
  return std::nullopt;
}

namespace {

using std::numbers::pi;

struct LeadingTerm {
  double constant;
  double log_rest;  // log of exp(k sqrt n) / n^a
  int sign;
};

LeadingTerm leading_term(KernelKind kind, std::size_t n, FormulaVariant variant) {
  const double x = static_cast<double>(n);
  switch (kind) {
    case KernelKind::Q: {
      // The printed prefactor 3^{3/4} / (4 * 3^{1/4}) reduces to sqrt(3)/4,
      // against the classical 1 / (4 * 3^{1/4}).
      const double constant = variant == FormulaVariant::AsPrinted
                                  ? std::pow(3.0, 0.75) / (4.0 * std::pow(3.0, 0.25))
                                  : 1.0 / (4.0 * std::pow(3.0, 0.25));
      return {constant, pi * std::sqrt(x / 3.0) - 0.75 * std::log(x), 1};
    }
    case KernelKind::QStar:
      return {1.0 / (2.0 * std::pow(24.0, 0.25)), pi * std::sqrt(x / 6.0) - 0.75 * std::log(x),
              n % 2 == 0 ? 1 : -1};
    case KernelKind::P:
      return {1.0 / (4.0 * std::sqrt(3.0)), pi * std::sqrt(2.0 * x / 3.0) - std::log(x), 1};
    case KernelKind::PStar:
      break;
  }
  throw UnsupportedKind("no asymptotic formula for the p* kernel");
}

}  // namespace

AsymptoticReport asymptotic_estimate(KernelKind kind, std::size_t n, FormulaVariant variant,
                                     const BigInt& exact_value) {
  if (kind == KernelKind::PStar) throw UnsupportedKind("no asymptotic formula for the p* kernel");
  if (n < 2) throw DomainError("asymptotic estimates need n >= 2");
  const LeadingTerm term = leading_term(kind, n, variant);

  AsymptoticReport report;
  report.kind = kind;
  report.variant = variant;
  report.n = n;
  report.exact_value = exact_value;
  report.formula_constant = term.constant;
  report.estimate = term.sign * term.constant * std::exp(term.log_rest);
  // Work in logs so the ratio stays accurate when the values are huge.
  const int exact_sign = mpz_sgn(exact_value.get_mpz_t());
  if (exact_sign == 0) {
    report.ratio = 0.0;
    report.fitted_constant = 0.0;
  } else {
    const double log_fit = log_abs(exact_value) - term.log_rest;
    const double sign = exact_sign * term.sign;
    report.fitted_constant = sign * std::exp(log_fit);
    report.ratio = report.fitted_constant / term.constant;
  }
  return report;
}

AsymptoticReport asymptotic_estimate(KernelKind kind, std::size_t n, FormulaVariant variant) {
  if (kind == KernelKind::PStar) throw UnsupportedKind("no asymptotic formula for the p* kernel");
  if (n < 2) throw DomainError("asymptotic estimates need n >= 2");
  const BigInt exact = kind == KernelKind::P ? p_pentagonal_recurrence(n)[n]
                                             : (*KernelCache::global().get(kind, n))[n];
  return asymptotic_estimate(kind, n, variant, exact);
}

}  // namespace pfsign
