#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pfsign/arith.hpp"
#include "pfsign/encoding.hpp"
#include "pfsign/partition.hpp"

namespace pfsign {

// Two zero conventions live here. sign_change_count skips zeros entirely;
// sgn and the onset detectors treat 0 as positive.

/// -1 for x < 0, +1 otherwise (including 0).
int sgn(const BigInt& x);

/// Number of sign changes among the nonzero values s(1..y).
std::size_t sign_change_count(const ArithmeticSequence& s, std::size_t y);

enum class SignProperty { Alternating, ConstantSign };

std::string_view property_name(SignProperty p);

struct SignReport {
  SignProperty property = SignProperty::Alternating;
  /// Smallest index from which the property holds through the horizon.
  std::optional<std::size_t> onset;
  std::size_t horizon = 0;
  bool holds_at_horizon = false;
  /// sgn of the last examined value.
  int final_sign = 1;
};

/// Alternation of sgn(s(n)) on [onset, horizon]. A lone final element does
/// not count: onset is empty unless at least one alternating pair exists
/// at the end. Requires s.size() >= 2.
SignReport alternation_onset(const ArithmeticSequence& s);

/// Constant sgn on [onset, horizon]. Always reports an onset (possibly the
/// last index); holds_at_horizon requires onset < horizon unless the
/// sequence has a single element.
SignReport constant_sign_onset(const ArithmeticSequence& s);

struct DifferenceRow {
  std::size_t n = 0;
  /// (c2(n+1) + c2(n)) / c2(n); empty where c2(n) = 0.
  std::optional<double> ratio;
  /// finv(n+1) / c2(n), when the inverse was supplied.
  std::optional<double> inverse_ratio;
};

/// Difference-relation ratios for n = 1..N-1. The encoding must use the
/// QStar kernel (DomainError otherwise).
std::vector<DifferenceRow> difference_relation_diagnostic(
    const EncodedSequence& c2, const ArithmeticSequence* inverse = nullptr);

struct HypothesisVerdict {
  bool positivity_ok = true;
  bool growth_ok = false;
  double fitted_C = 0.0;
  std::optional<std::size_t> first_violation;
  std::size_t argmax = 0;  // index attaining fitted_C
};

inline constexpr std::size_t kGrowthTailStart = 16;

/// Positivity f(n) >= 1 plus a finite-range stand-in for f << |q*|:
/// C = max_{n >= 16} f(n) / |q*(n)| (skipping q*(n) = 0), accepted when
/// finite and not exceeded anywhere in the last quarter of the range.
HypothesisVerdict hypothesis_check(const ArithmeticSequence& f, const SeriesCoefficients& qstar);

}  // namespace pfsign
