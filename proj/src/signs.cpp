#include "pfsign/signs.hpp"

#include <cmath>
#include <string>

#include "pfsign/errors.hpp"

namespace pfsign {

int sgn(const BigInt& x) { return mpz_sgn(x.get_mpz_t()) < 0 ? -1 : 1; }

std::string_view property_name(SignProperty p) {
  return p == SignProperty::Alternating ? "alternating" : "constant-sign";
}

std::size_t sign_change_count(const ArithmeticSequence& s, std::size_t y) {
  if (y < 1 || y > s.size()) {
    throw ShapeError("Y = " + std::to_string(y) + " outside 1.." + std::to_string(s.size()));
  }
  std::size_t changes = 0;
  int previous = 0;
  for (std::size_t i = 1; i <= y; ++i) {
    const int sign = mpz_sgn(s(i).get_mpz_t());
    if (sign == 0) continue;
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

SignReport alternation_onset(const ArithmeticSequence& s) {
  const std::size_t horizon = s.size();
  if (horizon < 2) throw ShapeError("alternation needs at least two values");
  std::size_t onset = horizon;
  while (onset > 1 && sgn(s(onset - 1)) == -sgn(s(onset))) --onset;

  SignReport report;
  report.property = SignProperty::Alternating;
  report.horizon = horizon;
  report.final_sign = sgn(s(horizon));
  if (onset < horizon) {
    report.onset = onset;
    report.holds_at_horizon = true;
  }
  return report;
}

SignReport constant_sign_onset(const ArithmeticSequence& s) {
  const std::size_t horizon = s.size();
  std::size_t onset = horizon;
  while (onset > 1 && sgn(s(onset - 1)) == sgn(s(onset))) --onset;

  SignReport report;
  report.property = SignProperty::ConstantSign;
  report.horizon = horizon;
  report.final_sign = sgn(s(horizon));
  report.onset = onset;
  report.holds_at_horizon = onset < horizon || horizon == 1;
  return report;
}

namespace {

double ratio_of(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q.get_d();
}

}  // namespace

std::vector<DifferenceRow> difference_relation_diagnostic(const EncodedSequence& c2,
                                                          const ArithmeticSequence* inverse) {
  if (c2.kernel != KernelKind::QStar) {
    throw DomainError("difference relation applies to the q* encoding only");
  }
  const ArithmeticSequence& c = c2.values;
  if (c.size() < 2) throw ShapeError("difference relation needs at least two values");
  if (inverse != nullptr && inverse->size() < c.size()) {
    throw ShapeError("inverse sequence shorter than the encoding");
  }

  std::vector<DifferenceRow> rows;
  rows.reserve(c.size() - 1);
  for (std::size_t n = 1; n < c.size(); ++n) {
    DifferenceRow row;
    row.n = n;
    if (c(n) != 0) {
      row.ratio = ratio_of(c(n + 1) + c(n), c(n));
      if (inverse != nullptr) row.inverse_ratio = ratio_of((*inverse)(n + 1), c(n));
    }
    rows.push_back(row);
  }
  return rows;
}

HypothesisVerdict hypothesis_check(const ArithmeticSequence& f, const SeriesCoefficients& qstar) {
  const std::size_t n = f.size();
  if (qstar.order() < n) {
    throw ShapeError("q* prefix of order " + std::to_string(qstar.order()) +
                     " does not cover n = " + std::to_string(n));
  }

  HypothesisVerdict verdict;
  for (std::size_t i = 1; i <= n; ++i) {
    if (f(i) < 1) {
      verdict.positivity_ok = false;
      verdict.first_violation = i;
      break;
    }
  }

  if (n < kGrowthTailStart) return verdict;  // no tail to examine

  double max_log = -INFINITY;
  for (std::size_t i = kGrowthTailStart; i <= n; ++i) {
    if (qstar[i] == 0) continue;
    const double log_ratio = log_abs(f(i)) - log_abs(qstar[i]);
    if (log_ratio > max_log) {
      max_log = log_ratio;
      verdict.argmax = i;
    }
  }
  verdict.fitted_C = std::exp(max_log);
  const std::size_t tail = n - kGrowthTailStart + 1;
  const std::size_t last_quarter_start = n - tail / 4 + 1;
  verdict.growth_ok = std::isfinite(verdict.fitted_C) && verdict.argmax != 0 &&
                      verdict.argmax < last_quarter_start;
  return verdict;
}

}  // namespace pfsign
