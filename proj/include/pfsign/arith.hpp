#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfsign/bigint.hpp"

namespace pfsign {

/// Finite prefix f(1), ..., f(N) of an arithmetic function, N >= 1.
///
/// Values are exact and the sequence is immutable once built. Indexing is
/// 1-based to match the usual number-theoretic notation.
class ArithmeticSequence {
 public:
  explicit ArithmeticSequence(std::vector<BigInt> values, std::string name = {});

  static ArithmeticSequence from_ints(std::initializer_list<long> values,
                                      std::string name = {});

  std::size_t size() const { return values_.size(); }
  const std::string& name() const { return name_; }
  std::span<const BigInt> values() const { return values_; }

  /// Unchecked 1-based access.
  const BigInt& operator()(std::size_t n) const { return values_[n - 1]; }
  /// Checked 1-based access; throws ShapeError.
  const BigInt& at(std::size_t n) const;

  ArithmeticSequence prefix(std::size_t n) const;
  ArithmeticSequence renamed(std::string name) const;

  /// Compares values only; labels are ignored.
  friend bool operator==(const ArithmeticSequence& a, const ArithmeticSequence& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<BigInt> values_;
  std::string name_;
};

ArithmeticSequence operator+(const ArithmeticSequence& a, const ArithmeticSequence& b);
ArithmeticSequence operator-(const ArithmeticSequence& a, const ArithmeticSequence& b);
ArithmeticSequence operator*(const BigInt& k, const ArithmeticSequence& a);

struct FactorCounts {
  unsigned little_omega = 0;  // distinct primes
  unsigned big_omega = 0;     // with multiplicity

  friend bool operator==(const FactorCounts&, const FactorCounts&) = default;
};

/// Divisor lists for 1..N, built with the d, 2d, 3d, ... sieve.
class DivisorTable {
 public:
  explicit DivisorTable(std::size_t n);

  std::size_t limit() const { return offsets_.size() - 2; }
  /// Divisors of n in increasing order.
  std::span<const std::uint32_t> divisors(std::size_t n) const {
    return {divisors_.data() + offsets_[n], offsets_[n + 1] - offsets_[n]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> divisors_;
};

/// Big-omega for every n in 1..N (index 0 unused).
std::vector<unsigned> big_omega_table(std::size_t n);

// Named functions -----------------------------------------------------------

/// Names accepted by registry_lookup, in a stable order.
std::span<const std::string_view> registry_names();

/// First N values of a named arithmetic function.
///
/// `double_factorial_odd` is n -> (2n-1)!!, `qstar_seq` and `partition_seq`
/// are q*(n) and p(n) restricted to n >= 1.
ArithmeticSequence registry_lookup(std::string_view name, std::size_t n);

ArithmeticSequence epsilon_prefix(std::size_t n);

// Dirichlet algebra ---------------------------------------------------------

ArithmeticSequence dirichlet_convolve(const ArithmeticSequence& f,
                                      const ArithmeticSequence& g);

/// Throws NotInvertible for f(1) = 0 and NonUnitLeadingValue for
/// f(1) outside {+1, -1}.
void require_unit_leading(const ArithmeticSequence& f);

ArithmeticSequence dirichlet_inverse_recursive(const ArithmeticSequence& f);

/// Inverse as the alternating series f(1) * sum_m (-h)^{*m} with
/// h = f(1) * (f - f(1) eps). Since h(1) = 0, h^{*m}(n) vanishes once
/// m > Omega(n), so the sum is finite at every n.
ArithmeticSequence dirichlet_inverse_neumann(const ArithmeticSequence& f);

/// The bracketed alternating display with g = f - f(1) eps, evaluated
/// exactly as typeset (odd power minus f(1) times even power, j up to
/// floor(Omega(n)/2)). It does not satisfy f * f^{-1} = eps; it exists so the
/// discrepancy can be reported.
ArithmeticSequence dirichlet_inverse_printed_neumann(const ArithmeticSequence& f);

struct PartitionFormulaResult {
  std::size_t n = 0;
  BigRational value;   // the typeset double sum
  BigInt oracle;       // recursive inverse at n
  bool integral = false;
  bool matches = false;
  std::size_t terms = 0;  // number of (k, lambda) tuples enumerated
};

inline constexpr std::size_t kPartitionFormulaMaxN = 30;

/// Evaluates the partition-theoretic double sum over k = 1..Omega(n) and
/// divisor tuples with lambda_1 + 2 lambda_2 + ... + k lambda_k = n, using
/// the multinomial weight (sum lambda_i)! / (1! 2! ... k!) as typeset.
/// Requires f(1) = 1 and 2 <= n <= 30.
PartitionFormulaResult dirichlet_inverse_partition_formula(const ArithmeticSequence& f,
                                                           std::size_t n);

/// [g]_{*m}; m = 0 gives the eps prefix.
ArithmeticSequence m_fold_convolution(const ArithmeticSequence& g, unsigned m);

BigInt summatory(const ArithmeticSequence& f, std::size_t x);
/// S_f(1), ..., S_f(N) as a sequence.
ArithmeticSequence summatory_sequence(const ArithmeticSequence& f);

FactorCounts prime_factor_counts(std::uint64_t n);

}  // namespace pfsign
