#include "pfsign/arith.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pfsign/errors.hpp"

namespace pfsign {

double log_abs(const BigInt& x) {
  if (x == 0) return -INFINITY;
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

ArithmeticSequence::ArithmeticSequence(std::vector<BigInt> values, std::string name)
    : values_(std::move(values)), name_(std::move(name)) {
  if (values_.empty()) throw DomainError("arithmetic sequence needs at least f(1)");
}

ArithmeticSequence ArithmeticSequence::from_ints(std::initializer_list<long> values,
                                                 std::string name) {
  std::vector<BigInt> v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return ArithmeticSequence(std::move(v), std::move(name));
}

const BigInt& ArithmeticSequence::at(std::size_t n) const {
  if (n < 1 || n > values_.size()) {
    throw ShapeError("index " + std::to_string(n) + " outside 1.." +
                     std::to_string(values_.size()));
  }
  return values_[n - 1];
}

ArithmeticSequence ArithmeticSequence::prefix(std::size_t n) const {
  if (n < 1 || n > values_.size()) {
    throw ShapeError("prefix length " + std::to_string(n) + " outside 1.." +
                     std::to_string(values_.size()));
  }
  return ArithmeticSequence({values_.begin(), values_.begin() + static_cast<long>(n)}, name_);
}

ArithmeticSequence ArithmeticSequence::renamed(std::string name) const {
  return ArithmeticSequence(values_, std::move(name));
}

namespace {

void require_same_length(const ArithmeticSequence& a, const ArithmeticSequence& b) {
  if (a.size() != b.size()) {
    throw ShapeError("length mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
}

}  // namespace

ArithmeticSequence operator+(const ArithmeticSequence& a, const ArithmeticSequence& b) {
  require_same_length(a, b);
  std::vector<BigInt> out(a.size());
  for (std::size_t i = 1; i <= a.size(); ++i) out[i - 1] = a(i) + b(i);
  return ArithmeticSequence(std::move(out));
}

ArithmeticSequence operator-(const ArithmeticSequence& a, const ArithmeticSequence& b) {
  require_same_length(a, b);
  std::vector<BigInt> out(a.size());
  for (std::size_t i = 1; i <= a.size(); ++i) out[i - 1] = a(i) - b(i);
  return ArithmeticSequence(std::move(out));
}

ArithmeticSequence operator*(const BigInt& k, const ArithmeticSequence& a) {
  std::vector<BigInt> out(a.size());
  for (std::size_t i = 1; i <= a.size(); ++i) out[i - 1] = k * a(i);
  return ArithmeticSequence(std::move(out));
}

DivisorTable::DivisorTable(std::size_t n) : offsets_(n + 2, 0) {
  // Count first, then fill, so the lists land in one contiguous block.
  std::vector<std::size_t> count(n + 1, 0);
  for (std::size_t d = 1; d <= n; ++d)
    for (std::size_t m = d; m <= n; m += d) ++count[m];
  for (std::size_t m = 1; m <= n; ++m) offsets_[m + 1] = offsets_[m] + count[m];
  divisors_.resize(offsets_[n + 1]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t d = 1; d <= n; ++d)
    for (std::size_t m = d; m <= n; m += d) divisors_[cursor[m]++] = static_cast<std::uint32_t>(d);
}

std::vector<unsigned> big_omega_table(std::size_t n) {
  std::vector<unsigned> omega(n + 1, 0);
  std::vector<std::size_t> rest(n + 1);
  for (std::size_t i = 0; i <= n; ++i) rest[i] = i;
  for (std::size_t p = 2; p <= n; ++p) {
    if (rest[p] != p || omega[p] != 0) continue;  // composite
    for (std::size_t m = p; m <= n; m += p) {
      while (rest[m] % p == 0) {
        rest[m] /= p;
        ++omega[m];
      }
    }
  }
  return omega;
}

ArithmeticSequence epsilon_prefix(std::size_t n) {
  if (n == 0) throw DomainError("prefix length must be positive");
  std::vector<BigInt> v(n, 0);
  v[0] = 1;
  return ArithmeticSequence(std::move(v), "epsilon");
}

ArithmeticSequence dirichlet_convolve(const ArithmeticSequence& f, const ArithmeticSequence& g) {
  require_same_length(f, g);
  const std::size_t n = f.size();
  std::vector<BigInt> h(n, 0);
  for (std::size_t d = 1; d <= n; ++d) {
    if (f(d) == 0) continue;
    for (std::size_t k = 1; d * k <= n; ++k) {
      if (g(k) != 0) add_product(h[d * k - 1], f(d), g(k));
    }
  }
  return ArithmeticSequence(std::move(h));
}

void require_unit_leading(const ArithmeticSequence& f) {
  if (f(1) == 0) throw NotInvertible("f(1) = 0: no Dirichlet inverse");
  if (f(1) != 1 && f(1) != -1) {
    throw NonUnitLeadingValue("f(1) = " + f(1).get_str() +
                              " is not +1 or -1; the inverse is not integral");
  }
}

ArithmeticSequence dirichlet_inverse_recursive(const ArithmeticSequence& f) {
  require_unit_leading(f);
  const std::size_t n = f.size();
  const DivisorTable divisors(n);
  const BigInt& lead = f(1);  // 1/f(1) == f(1) for a unit
  std::vector<BigInt> inv(n, 0);
  inv[0] = lead;
  BigInt acc;
  for (std::size_t m = 2; m <= n; ++m) {
    acc = 0;
    for (std::uint32_t d : divisors.divisors(m)) {
      if (d == 1) continue;
      add_product(acc, f(d), inv[m / d - 1]);
    }
    inv[m - 1] = -lead * acc;
  }
  return ArithmeticSequence(std::move(inv), f.name().empty() ? "" : f.name() + "^-1");
}

ArithmeticSequence dirichlet_inverse_neumann(const ArithmeticSequence& f) {
  require_unit_leading(f);
  const std::size_t n = f.size();
  const BigInt lead = f(1);
  const ArithmeticSequence eps = epsilon_prefix(n);
  const ArithmeticSequence h = lead * (f - lead * eps);

  std::vector<BigInt> sum(n, 0);
  ArithmeticSequence power = eps;
  for (unsigned m = 0;; ++m) {
    bool any_nonzero = false;
    for (std::size_t i = 1; i <= n; ++i) {
      if (power(i) == 0) continue;
      any_nonzero = true;
      if (m % 2 == 0) sum[i - 1] += power(i);
      else sum[i - 1] -= power(i);
    }
    // h(1) = 0 makes h^{*m} vanish on 1..N once 2^m > N.
    if (!any_nonzero) break;
    power = dirichlet_convolve(power, h);
  }
  for (auto& v : sum) v *= lead;
  return ArithmeticSequence(std::move(sum), f.name().empty() ? "" : f.name() + "^-1");
}

ArithmeticSequence dirichlet_inverse_printed_neumann(const ArithmeticSequence& f) {
  require_unit_leading(f);
  const std::size_t n = f.size();
  const BigInt lead = f(1);
  const ArithmeticSequence eps = epsilon_prefix(n);
  const ArithmeticSequence g = f - lead * eps;
  const std::vector<unsigned> omega = big_omega_table(n);
  unsigned max_omega = 0;
  for (std::size_t i = 1; i <= n; ++i) max_omega = std::max(max_omega, omega[i]);

  // powers[m] = [g]_{*m}
  const unsigned top = 2 * (max_omega / 2) + 1;
  std::vector<ArithmeticSequence> powers{eps};
  for (unsigned m = 1; m <= top; ++m) powers.push_back(dirichlet_convolve(powers.back(), g));

  std::vector<BigInt> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    BigInt value = eps(i) * lead;  // eps/f(1)
    BigInt scale = lead;           // 1/f(1)^{2j+1} for a unit
    for (unsigned j = 0; j <= omega[i] / 2; ++j) {
      value += (powers[2 * j + 1](i) - lead * powers[2 * j](i)) * scale;
      scale *= lead * lead;
    }
    out[i - 1] = std::move(value);
  }
  return ArithmeticSequence(std::move(out));
}

namespace {

BigInt factorial(unsigned long k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

struct FormulaSearch {
  const ArithmeticSequence& f;
  std::span<const std::uint32_t> divisors;
  std::size_t k = 0;
  std::vector<std::uint32_t> parts;  // lambda_1..lambda_i chosen so far
  BigRational total = 0;
  std::size_t terms = 0;

  void visit(std::size_t remaining) {
    const std::size_t i = parts.size() + 1;  // weight of the next part
    if (i > k) {
      if (remaining != 0) return;
      emit();
      return;
    }
    // Parts i..k still need at least i + ... + k >= remaining budget of weight.
    const std::size_t min_rest = (k * (k + 1) - (i - 1) * i) / 2;
    for (std::uint32_t d : divisors) {
      if (i * d > remaining) break;
      if (remaining - i * d + i < min_rest) continue;
      parts.push_back(d);
      visit(remaining - i * d);
      parts.pop_back();
    }
  }

  void emit() {
    ++terms;
    unsigned long lambda_sum = 0;
    BigInt product = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      lambda_sum += parts[i - 1];
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), f(parts[i - 1]).get_mpz_t(), i);
      product *= power;
    }
    BigInt denominator = 1;
    for (std::size_t i = 1; i <= k; ++i) denominator *= factorial(i);
    BigRational term(factorial(lambda_sum) * product, denominator);
    term.canonicalize();
    if (k % 2 == 1) total -= term;
    else total += term;
  }
};

}  // namespace

PartitionFormulaResult dirichlet_inverse_partition_formula(const ArithmeticSequence& f,
                                                           std::size_t n) {
  if (n < 2) throw DomainError("the partition formula applies to n >= 2");
  if (n > kPartitionFormulaMaxN) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                        std::to_string(kPartitionFormulaMaxN));
  }
  if (f(1) != 1) throw DomainError("the partition formula requires f(1) = 1");
  if (f.size() < n) throw ShapeError("sequence shorter than n");

  const ArithmeticSequence head = f.prefix(n);
  const DivisorTable table(n);
  FormulaSearch search{head, table.divisors(n), 0, {}, 0, 0};
  const unsigned omega = prime_factor_counts(n).big_omega;
  for (std::size_t k = 1; k <= omega; ++k) {
    search.k = k;
    search.visit(n);
  }

  PartitionFormulaResult result;
  result.n = n;
  result.value = search.total;
  result.terms = search.terms;
  result.oracle = dirichlet_inverse_recursive(head)(n);
  result.integral = result.value.get_den() == 1;
  result.matches = result.integral && result.value.get_num() == result.oracle;
  return result;
}

ArithmeticSequence m_fold_convolution(const ArithmeticSequence& g, unsigned m) {
  ArithmeticSequence result = epsilon_prefix(g.size());
  for (unsigned i = 0; i < m; ++i) result = dirichlet_convolve(result, g);
  return result;
}

BigInt summatory(const ArithmeticSequence& f, std::size_t x) {
  if (x < 1 || x > f.size()) {
    throw ShapeError("summatory bound " + std::to_string(x) + " outside 1.." +
                     std::to_string(f.size()));
  }
  BigInt total = 0;
  for (std::size_t i = 1; i <= x; ++i) total += f(i);
  return total;
}

ArithmeticSequence summatory_sequence(const ArithmeticSequence& f) {
  std::vector<BigInt> out(f.size());
  BigInt running = 0;
  for (std::size_t i = 1; i <= f.size(); ++i) {
    running += f(i);
    out[i - 1] = running;
  }
  return ArithmeticSequence(std::move(out), f.name().empty() ? "" : "S_" + f.name());
}

FactorCounts prime_factor_counts(std::uint64_t n) {
  if (n == 0) throw DomainError("prime factor counts need n >= 1");
  FactorCounts counts;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ++counts.little_omega;
    while (n % p == 0) {
      n /= p;
      ++counts.big_omega;
    }
  }
  if (n > 1) {
    ++counts.little_omega;
    ++counts.big_omega;
  }
  return counts;
}

}  // namespace pfsign
