#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbitlab/bigint.hpp"
#include "orbitlab/errors.hpp"

namespace orbitlab {

/// Logarithm of an exact positive quantity, carried as a double.
///
/// Values produced by log_big are computed from the bit length and the top 64
/// bits of the integer — the integer itself is never converted to a machine
/// float — and satisfy a relative-error bound of 2^-40. Sums and differences
/// of such values inherit ordinary double rounding on top of that.
struct LogReal {
  double value = 0.0;

  friend LogReal operator+(LogReal a, LogReal b) { return {a.value + b.value}; }
  friend LogReal operator-(LogReal a, LogReal b) { return {a.value - b.value}; }
  friend LogReal operator*(double s, LogReal a) { return {s * a.value}; }
  LogReal& operator+=(LogReal o) {
    value += o.value;
    return *this;
  }
  friend bool operator==(LogReal, LogReal) = default;
  friend auto operator<=>(LogReal, LogReal) = default;
};

/// Deterministic work limits for factor(). Exceeding them is not an error:
/// whatever resists the budget is returned as the cofactor.
struct FactorBudget {
  std::uint32_t trial_bound = 1'000'000;  // trial-divide by every prime <= this
  std::uint64_t rho_cap = 2'000'000;      // total Brent-rho iterations per call
};

/// Outcome of factor(): certified prime factors in increasing order, plus a
/// cofactor that is 1 on success or a certified composite with no prime
/// factor below the trial bound when the budget ran out.
struct Factorization {
  std::vector<std::pair<Int, unsigned>> factors;
  Int cofactor = 1;

  bool complete() const { return cofactor == 1; }
  Int reconstruct() const;  // product of factors^exponents times cofactor
};

/// p-adic valuation of n (the exponent of p in n). Requires n != 0 (throws
/// ZeroInput) and p prime; p >= 2 is what is actually checked.
unsigned vp(const Int& n, const Int& p);

/// Largest divisor of n coprime to m, for n, m >= 1. Computed by repeatedly
/// dividing out gcds; never factors anything.
Int coprime_part(Int n, const Int& m);

/// Natural log of n >= 1 (throws NonPositive otherwise), exact per LogReal.
LogReal log_big(const Int& n);

/// Miller–Rabin. Deterministic (fixed base set) below 3.3 * 10^24; above
/// that, 64 rounds with bases drawn from a generator seeded by the input.
bool is_probable_prime(const Int& n);

/// Factor |n| (n != 0, else ZeroInput) within the budget: sieve-backed trial
/// division, then Miller–Rabin plus Brent's rho with a deterministic
/// parameter schedule. Never throws for hard inputs — see Factorization.
Factorization factor(const Int& n, const FactorBudget& budget = {});

/// All primes <= bound, sieved once and memoized (thread-safe).
const std::vector<std::uint32_t>& primes_below(std::uint32_t bound);

/// Divide out of n every factor of each listed prime.
Int strip_primes(Int n, const std::vector<Int>& primes);

}  // namespace orbitlab
