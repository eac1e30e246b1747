#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <random>

#include "orbitlab/exactnum.hpp"

using namespace orbitlab;

namespace {

// High-precision ln 2, frozen independently of the implementation.
const double kLn2 = 0.693147180559945309417232121458;

// Test-local trial-division oracle (complete for inputs < bound^2).
std::vector<std::pair<std::uint64_t, unsigned>> oracle_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

TEST_CASE("vp on pinned values") {
  CHECK(vp(Int(12), Int(2)) == 2);
  CHECK(vp(Int("34467620586"), Int(7)) == 1);
  CHECK(vp(Int(321), Int(107)) == 1);
  CHECK(vp(Int(-12), Int(2)) == 2);
  CHECK(vp(Int(7), Int(2)) == 0);
  CHECK(vp(pow(Int(3), 100) * 5, Int(3)) == 100);
  CHECK_THROWS_AS(vp(Int(0), Int(2)), ZeroInput);
}

TEST_CASE("vp against a counting oracle") {
  std::mt19937_64 rng(11);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 101};
  for (int i = 0; i < 500; ++i) {
    std::uint64_t p = primes[rng() % 7];
    unsigned e = static_cast<unsigned>(rng() % 20);
    std::uint64_t rest = rng() % 1000 + 1;
    while (rest % p == 0) ++rest;
    Int n = pow(Int(p), e) * rest;
    CHECK(vp(n, Int(p)) == e);
  }
}

TEST_CASE("coprime_part on pinned values") {
  CHECK(coprime_part(Int(12), Int(2)) == 3);
  CHECK(coprime_part(Int(321), Int(42)) == 107);
  CHECK(coprime_part(Int(100), Int(1)) == 100);
  CHECK(coprime_part(Int(1), Int(30)) == 1);
  CHECK(coprime_part(Int(8), Int(2)) == 1);
}

TEST_CASE("coprime_part against a factoring oracle") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 400; ++i) {
    std::uint64_t n = rng() % 999'999 + 1;
    std::uint64_t m = rng() % 999 + 1;
    Int expected = 1;
    for (auto [p, e] : oracle_factor(n)) {
      if (m % p != 0) expected *= pow(Int(p), e);
    }
    CHECK(coprime_part(Int(n), Int(m)) == expected);
  }
}

TEST_CASE("log_big pinned values and error bound") {
  CHECK(log_big(Int(1)).value == 0.0);
  CHECK(std::abs(log_big(Int(6)).value - std::log(6.0)) <= 1e-15);
  CHECK(std::abs(log_big(Int(14)).value - std::log(14.0)) <= 1e-15);

  double expected = 4096.0 * kLn2;
  double got = log_big(Int(1) << 4096).value;
  CHECK(std::abs(got - expected) / expected <= std::ldexp(1.0, -40));

  CHECK_THROWS_AS(log_big(Int(0)), NonPositive);
  CHECK_THROWS_AS(log_big(Int(-5)), NonPositive);
}

TEST_CASE("log_big additivity") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    Int a = Int(rng()) * rng() + 1;
    Int b = Int(rng()) + 1;
    double lhs = log_big(a * b).value;
    double rhs = (log_big(a) + log_big(b)).value;
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("is_probable_prime spot values") {
  CHECK(is_probable_prime(Int(2)));
  CHECK(is_probable_prime(Int(104729)));
  CHECK(is_probable_prime((Int(1) << 61) - 1));
  CHECK(is_probable_prime(Int("8707098576024044891")));
  CHECK_FALSE(is_probable_prime(Int(1)));
  CHECK_FALSE(is_probable_prime(Int(561)));          // Carmichael
  CHECK_FALSE(is_probable_prime(Int(3215031751)));   // strong pseudoprime base 2..7
  CHECK_FALSE(is_probable_prime(Int("3317044064679887385961980")));
}

TEST_CASE("factor pinned values") {
  Factorization f1 = factor(Int("34467620586"));
  REQUIRE(f1.complete());
  std::vector<std::pair<Int, unsigned>> want1{
      {2, 1}, {3, 1}, {7, 1}, {19, 1}, {2371, 1}, {18217, 1}};
  CHECK(f1.factors == want1);

  Factorization f2 = factor(Int("1732712616628784933309"));
  REQUIRE(f2.complete());
  std::vector<std::pair<Int, unsigned>> want2{{199, 1}, {Int("8707098576024044891"), 1}};
  CHECK(f2.factors == want2);

  Factorization f3 = factor(Int(1));
  CHECK(f3.factors.empty());
  CHECK(f3.cofactor == 1);

  Factorization f4 = factor(Int(-360));
  std::vector<std::pair<Int, unsigned>> want4{{2, 3}, {3, 2}, {5, 1}};
  CHECK(f4.factors == want4);

  CHECK_THROWS_AS(factor(Int(0)), ZeroInput);
}

TEST_CASE("factor budget overflow lands in the cofactor") {
  Int p("1000000007"), q("1000000009");
  FactorBudget tiny{1000, 16};
  Factorization f = factor(p * q * 6, tiny);
  CHECK_FALSE(f.complete());
  CHECK(f.cofactor == p * q);
  CHECK_FALSE(is_probable_prime(f.cofactor));
  std::vector<std::pair<Int, unsigned>> small{{2, 1}, {3, 1}};
  CHECK(f.factors == small);
  CHECK(f.reconstruct() == p * q * 6);

  // Same input, same budget: identical outcome.
  Factorization g = factor(p * q * 6, tiny);
  CHECK(g.factors == f.factors);
  CHECK(g.cofactor == f.cofactor);
}

TEST_CASE("factor reconstructs random 64-bit inputs") {
  std::mt19937_64 rng(14);
  FactorBudget budget{10'000, 500'000};
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t n = rng() | 1;  // odd, nonzero
    Factorization f = factor(Int(n), budget);
    CHECK(f.reconstruct() == n);
    for (const auto& [p, e] : f.factors) CHECK(is_probable_prime(p));
    if (!f.complete()) CHECK_FALSE(is_probable_prime(f.cofactor));
  }
}

TEST_CASE("factor reconstructs random 256-bit inputs") {
  std::mt19937_64 rng(15);
  FactorBudget budget{10'000, 20'000};
  for (int i = 0; i < 200; ++i) {
    Int n = 0;
    for (int w = 0; w < 4; ++w) n = (n << 64) | rng();
    if (n == 0) n = 1;
    Factorization f = factor(n, budget);
    CHECK(f.reconstruct() == n);
    for (const auto& [p, e] : f.factors) CHECK(is_probable_prime(p));
    if (!f.complete()) {
      CHECK_FALSE(is_probable_prime(f.cofactor));
      // No prime below the trial bound survives in the cofactor.
      for (std::uint32_t p : primes_below(budget.trial_bound)) {
        CHECK(f.cofactor % p != 0);
      }
    }
  }
}

TEST_CASE("primes_below") {
  CHECK(primes_below(100).size() == 25);
  CHECK(primes_below(1'000'000).size() == 78498);
  CHECK(primes_below(2).size() == 1);
}

TEST_CASE("strip_primes") {
  CHECK(strip_primes(Int(360), {Int(2), Int(3)}) == 5);
  CHECK(strip_primes(Int(7), {Int(7)}) == 1);
  CHECK(strip_primes(Int(11), {Int(2)}) == 11);
}

TEST_CASE("parse_bigint") {
  CHECK(parse_bigint("123456789012345678901234567890") == Int("123456789012345678901234567890"));
  CHECK(parse_bigint("-42") == -42);
  CHECK_THROWS_AS(parse_bigint("12a"), ParseError);
  CHECK_THROWS_AS(parse_bigint(""), ParseError);
  CHECK_THROWS_AS(parse_bigint("-"), ParseError);
}
