#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "pfsign/arith.hpp"
#include "pfsign/errors.hpp"
#include "pfsign/partition.hpp"

namespace pfsign {

namespace {

constexpr std::array<std::string_view, 12> kNames = {
    "one",           "id",           "epsilon",        "mobius",
    "liouville",     "phi",          "divisor_count",  "omega_plus_one",
    "sq_indicator",  "double_factorial_odd", "qstar_seq", "partition_seq"};

// Smallest-prime-factor sieve; every multiplicative function below is read
// off the factorization it gives.
struct Factorizer {
  std::vector<std::uint32_t> spf;

  explicit Factorizer(std::size_t n) : spf(n + 1, 0) {
    for (std::size_t p = 2; p <= n; ++p) {
      if (spf[p] != 0) continue;
      for (std::size_t m = p; m <= n; m += p)
        if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(p);
    }
  }

  // Calls visit(p, e) for each prime power p^e exactly dividing n.
  template <typename Visit>
  void for_each_prime_power(std::size_t n, Visit&& visit) const {
    while (n > 1) {
      const std::uint32_t p = spf[n];
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      visit(p, e);
    }
  }
};

std::vector<BigInt> tabulate(std::size_t n, auto&& value) {
  std::vector<BigInt> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(value(i));
  return out;
}

}  // namespace

std::span<const std::string_view> registry_names() { return kNames; }

ArithmeticSequence registry_lookup(std::string_view name, std::size_t n) {
  if (std::find(kNames.begin(), kNames.end(), name) == kNames.end()) {
    throw NameError("unknown function '" + std::string(name) + "'");
  }
  if (n == 0) throw DomainError("prefix length must be positive");
  const std::string label(name);

  if (name == "one") return ArithmeticSequence(tabulate(n, [](std::size_t) { return 1L; }), label);
  if (name == "id") {
    return ArithmeticSequence(tabulate(n, [](std::size_t i) { return static_cast<long>(i); }), label);
  }
  if (name == "epsilon") return epsilon_prefix(n);
  if (name == "sq_indicator") {
    return ArithmeticSequence(tabulate(n,
                                       [](std::size_t i) {
                                         auto r = static_cast<std::size_t>(std::sqrt(double(i)));
                                         while (r * r > i) --r;
                                         while ((r + 1) * (r + 1) <= i) ++r;
                                         return r * r == i ? 1L : 0L;
                                       }),
                              label);
  }
  if (name == "double_factorial_odd") {
    std::vector<BigInt> out(n);
    BigInt running = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      running *= static_cast<unsigned long>(2 * i - 1);
      out[i - 1] = running;
    }
    return ArithmeticSequence(std::move(out), label);
  }
  if (name == "qstar_seq" || name == "partition_seq") {
    const SeriesCoefficients series = name == "qstar_seq"
                                          ? *KernelCache::global().get(KernelKind::QStar, n)
                                          : p_pentagonal_recurrence(n);
    return ArithmeticSequence({series.coeffs().begin() + 1, series.coeffs().end()}, label);
  }

  const Factorizer sieve(n);
  if (name == "mobius") {
    return ArithmeticSequence(tabulate(n,
                                       [&](std::size_t i) {
                                         long mu = 1;
                                         sieve.for_each_prime_power(i, [&](auto, unsigned e) {
                                           mu = e > 1 ? 0 : -mu;
                                         });
                                         return mu;
                                       }),
                              label);
  }
  if (name == "liouville") {
    return ArithmeticSequence(tabulate(n,
                                       [&](std::size_t i) {
                                         unsigned total = 0;
                                         sieve.for_each_prime_power(
                                             i, [&](auto, unsigned e) { total += e; });
                                         return total % 2 == 0 ? 1L : -1L;
                                       }),
                              label);
  }
  if (name == "phi") {
    return ArithmeticSequence(tabulate(n,
                                       [&](std::size_t i) {
                                         unsigned long phi = 1;
                                         sieve.for_each_prime_power(i, [&](std::uint32_t p, unsigned e) {
                                           phi *= p - 1;
                                           for (unsigned k = 1; k < e; ++k) phi *= p;
                                         });
                                         return phi;
                                       }),
                              label);
  }
  if (name == "divisor_count") {
    return ArithmeticSequence(tabulate(n,
                                       [&](std::size_t i) {
                                         unsigned long d = 1;
                                         sieve.for_each_prime_power(
                                             i, [&](auto, unsigned e) { d *= e + 1; });
                                         return d;
                                       }),
                              label);
  }
  // omega_plus_one
  return ArithmeticSequence(tabulate(n,
                                     [&](std::size_t i) {
                                       unsigned long w = 1;
                                       sieve.for_each_prime_power(i, [&](auto, unsigned) { ++w; });
                                       return w;
                                     }),
                            label);
}

}  // namespace pfsign
