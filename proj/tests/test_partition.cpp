#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pfsign/errors.hpp"
#include "pfsign/partition.hpp"

using namespace pfsign;
using oracle::ints;

namespace {

std::vector<BigInt> coeffs(const SeriesCoefficients& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

}  // namespace

TEST_CASE("kernel prefixes from the generating products") {
  CHECK(coeffs(kernel_coefficients(KernelKind::P, 10)) == ints({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
  CHECK(coeffs(kernel_coefficients(KernelKind::QStar, 12)) ==
        ints({1, -1, 0, -1, 1, -1, 1, -1, 2, -2, 2, -2, 3}));
  CHECK(coeffs(kernel_coefficients(KernelKind::PStar, 15)) ==
        ints({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1}));
  CHECK(coeffs(kernel_coefficients(KernelKind::Q, 11)) == ints({1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12}));
  CHECK(coeffs(kernel_coefficients(KernelKind::Q, 0)) == ints({1}));
  for (KernelKind k : kAllKernels) {
    CHECK(kernel_coefficients(k, 5).kind() == k);
    CHECK(kernel_coefficients(k, 40)[0] == 1);
  }
}

TEST_CASE("kernels agree with partition enumeration") {
  for (long n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(kernel_coefficients(KernelKind::Q, 30)[n] == oracle::q(n));
    CHECK(kernel_coefficients(KernelKind::QStar, 30)[n] == oracle::qstar(n));
    CHECK(kernel_coefficients(KernelKind::PStar, 30)[n] == oracle::pstar(n));
    CHECK(kernel_coefficients(KernelKind::P, 30)[n] == oracle::p(n));
  }
}

TEST_CASE("pentagonal recurrence") {
  CHECK(coeffs(p_pentagonal_recurrence(10)) == ints({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
  CHECK(coeffs(p_pentagonal_recurrence(0)) == ints({1}));
  CHECK(p_pentagonal_recurrence(100)[100] == 190569292);
  CHECK(p_pentagonal_recurrence(100)[100] == kernel_coefficients(KernelKind::P, 100)[100]);
  CHECK(p_pentagonal_recurrence(2000) == kernel_coefficients(KernelKind::P, 2000));
}

TEST_CASE("series reciprocal") {
  CHECK(series_reciprocal(kernel_coefficients(KernelKind::P, 60)) ==
        kernel_coefficients(KernelKind::PStar, 60));
  CHECK(series_reciprocal(kernel_coefficients(KernelKind::Q, 60)) ==
        kernel_coefficients(KernelKind::QStar, 60));
  CHECK(series_reciprocal(kernel_coefficients(KernelKind::Q, 8)).kind() == KernelKind::QStar);
  CHECK(coeffs(series_reciprocal(SeriesCoefficients(ints({1, 0, 0, 0})))) == ints({1, 0, 0, 0}));
  CHECK(coeffs(series_reciprocal(SeriesCoefficients(ints({-1, 1})))) == ints({-1, -1}));
  CHECK_THROWS_AS(series_reciprocal(SeriesCoefficients(ints({2, 1}))), NonUnitLeadingCoefficient);
  CHECK_THROWS_AS(series_reciprocal(SeriesCoefficients(ints({0, 1}))), NonUnitLeadingCoefficient);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<long> dist(-20, 20);
    std::vector<BigInt> a(1 + rng() % 40);
    for (auto& x : a) x = dist(rng);
    a[0] = trial % 2 == 0 ? 1 : -1;
    const SeriesCoefficients s(a);
    const auto b = series_reciprocal(s);
    const auto one = cauchy_product(s, b);
    for (std::size_t i = 0; i <= one.order(); ++i) CHECK(one[i] == (i == 0 ? 1 : 0));
    CHECK(series_reciprocal(b) == s);
  }
}

TEST_CASE("reciprocity and kernel pairs to N = 2000") {
  auto& cache = KernelCache::global();
  for (KernelKind k : kAllKernels) {
    const auto s = cache.get(k, 2000);
    CHECK(series_reciprocal(series_reciprocal(*s)) == *s);
    CHECK(series_reciprocal(*s) == *cache.get(reciprocal_kind(k), 2000));
  }
}

TEST_CASE("distinct parts equal odd parts (Euler) to 500") {
  constexpr std::size_t n = 500;
  std::vector<BigInt> odd(n + 1, 0);
  odd[0] = 1;
  for (std::size_t part = 1; part <= n; part += 2)
    for (std::size_t i = part; i <= n; ++i) odd[i] += odd[i - part];
  CHECK(coeffs(kernel_coefficients(KernelKind::Q, n)) == odd);
}

TEST_CASE("q* sign pattern with the single zero at n = 2") {
  const auto qs = KernelCache::global().get(KernelKind::QStar, 2000);
  std::vector<std::size_t> zeros;
  for (std::size_t n = 1; n <= 2000; ++n) {
    const int s = mpz_sgn((*qs)[n].get_mpz_t());
    if (s == 0) zeros.push_back(n);
    else CHECK(s == (n % 2 == 0 ? 1 : -1));
  }
  CHECK(zeros == std::vector<std::size_t>{2});
}

TEST_CASE("growth ordering |p*| <= |q*| <= q <= p on [50, 2000]") {
  auto& cache = KernelCache::global();
  const auto q = cache.get(KernelKind::Q, 2000), qs = cache.get(KernelKind::QStar, 2000);
  const auto ps = cache.get(KernelKind::PStar, 2000), p = cache.get(KernelKind::P, 2000);
  for (std::size_t n = 50; n <= 2000; ++n) {
    CHECK(abs((*ps)[n]) <= abs((*qs)[n]));
    CHECK(abs((*qs)[n]) <= (*q)[n]);
    CHECK((*q)[n] <= (*p)[n]);
  }
}

TEST_CASE("kernel cache") {
  KernelCache cache;
  const auto a = cache.get(KernelKind::P, 100);
  CHECK(cache.get(KernelKind::P, 100) == a);
  const auto shorter = cache.get(KernelKind::P, 40);
  CHECK(*shorter == kernel_coefficients(KernelKind::P, 40));
  CHECK(shorter->kind() == KernelKind::P);
  CHECK(*cache.get(KernelKind::Q, 40) == kernel_coefficients(KernelKind::Q, 40));
}

TEST_CASE("kernel names") {
  for (KernelKind k : kAllKernels) {
    CHECK(parse_kernel_kind(kernel_name(k)) == k);
    CHECK(reciprocal_kind(reciprocal_kind(k)) == k);
  }
  CHECK(encoding_index(KernelKind::Q) == 1);
  CHECK(encoding_index(KernelKind::P) == 4);
  CHECK_FALSE(parse_kernel_kind("r").has_value());
}

TEST_CASE("asymptotic estimates") {
  SUBCASE("q* estimate sign follows (-1)^n") {
    for (FormulaVariant v : {FormulaVariant::AsPrinted, FormulaVariant::StandardLiterature}) {
      CHECK(asymptotic_estimate(KernelKind::QStar, 50, v).estimate > 0);
      CHECK(asymptotic_estimate(KernelKind::QStar, 51, v).estimate < 0);
    }
  }
  SUBCASE("p(1000) within 10% of Hardy-Ramanujan") {
    const auto r = asymptotic_estimate(KernelKind::P, 1000, FormulaVariant::StandardLiterature);
    CHECK(r.exact_value == p_pentagonal_recurrence(1000)[1000]);
    CHECK(r.ratio >= 0.9);
    CHECK(r.ratio <= 1.1);
  }
  SUBCASE("q(1000) fitted constant sides with the classical constant") {
    const auto printed = asymptotic_estimate(KernelKind::Q, 1000, FormulaVariant::AsPrinted);
    const auto standard = asymptotic_estimate(KernelKind::Q, 1000, FormulaVariant::StandardLiterature);
    CHECK(printed.fitted_constant == doctest::Approx(standard.fitted_constant));
    CHECK(standard.formula_constant == doctest::Approx(1.0 / (4.0 * std::pow(3.0, 0.25))));
    CHECK(printed.formula_constant == doctest::Approx(std::sqrt(3.0) / 4.0));
    CHECK(std::fabs(standard.fitted_constant / standard.formula_constant - 1) < 0.1);
    CHECK(std::fabs(printed.fitted_constant / printed.formula_constant - 1) > 0.5);
  }
  SUBCASE("q*(2000) ratio under the printed constants") {
    const auto r = asymptotic_estimate(KernelKind::QStar, 2000, FormulaVariant::AsPrinted);
    CHECK(std::fabs(r.ratio - 1.0) <= 0.1);
  }
  SUBCASE("ratio is finite and nonzero, fitted = ratio * constant") {
    for (KernelKind k : {KernelKind::Q, KernelKind::QStar, KernelKind::P}) {
      for (std::size_t n : {3u, 10u, 99u, 400u}) {
        const auto r = asymptotic_estimate(k, n, FormulaVariant::StandardLiterature);
        CHECK(std::isfinite(r.ratio));
        CHECK(r.ratio != 0.0);
        CHECK(r.fitted_constant == doctest::Approx(r.ratio * r.formula_constant));
        CHECK(r.ratio == doctest::Approx(r.exact_value.get_d() / r.estimate));
      }
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(asymptotic_estimate(KernelKind::PStar, 10, FormulaVariant::AsPrinted),
                    UnsupportedKind);
    CHECK_THROWS_AS(asymptotic_estimate(KernelKind::P, 1, FormulaVariant::AsPrinted), DomainError);
  }
}
