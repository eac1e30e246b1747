#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orbitlab/exactnum.hpp"
#include "orbitlab/projective.hpp"

namespace orbitlab {

/// A prime dividing F(f^n x) that divides no earlier F(f^m x) and lies
/// outside S, with its exact valuation weight in F(f^n x).
struct PpdPrime {
  Int p;
  unsigned weight = 0;
};

enum class PpdMethod {
  factorization,  // the primitive part was fully factored and certified
  coprime_part,   // existence only, via gcd arithmetic — no primes listed
};

/// One orbit step's primitive-prime-divisor report. b_value is the exact
/// log of the primitive part (the l = 0 window sum), so b_value > 0 and
/// exists always agree.
struct PpdReport {
  unsigned n = 0;
  bool exists = false;
  std::optional<std::vector<PpdPrime>> primitive_primes;  // nullopt: uncertified
  LogReal b_value{};
  PpdMethod method = PpdMethod::coprime_part;
};

/// For n = 0..n_max: does F(f^n x) have a prime factor outside S dividing
/// no earlier F(f^m x)? Decided entirely by gcd arithmetic on the running
/// support product — nothing is ever factored. Throws OnSupport when the
/// orbit meets (F = 0).
std::vector<std::pair<unsigned, bool>> ppd_exists(const SelfMap& f, const ProjPoint& x,
                                                  const Form& F, const std::vector<Int>& S,
                                                  unsigned n_max);

/// Existence plus an attempt to list the primitive primes with their
/// weights by factoring the primitive part within the budget. Rows whose
/// factorization does not finish carry primitive_primes = nullopt and
/// method = coprime_part; the run itself never aborts on budget.
std::vector<PpdReport> ppd_primes(const SelfMap& f, const ProjPoint& x, const Form& F,
                                  const std::vector<Int>& S, unsigned n_max,
                                  const FactorBudget& budget = {});

/// Window sum B_{n,l}: sum of vp(F(f^n x)) * log p over primes p outside S
/// with vp(F(f^m x)) = 0 for all 0 <= m <= n-l-1. Equals the exact log of
/// the window-primitive part, so no factorization happens. Requires
/// 0 <= l < n.
LogReal b_sum(const SelfMap& f, const ProjPoint& x, const Form& F, const std::vector<Int>& S,
              unsigned n, unsigned l);

/// B_{n,l} for every n = 0..n_max with one shared orbit walk. Rows with
/// n <= l have an empty exclusion window, so they count every prime of
/// F(f^n x) outside S (the defining condition is vacuous there).
std::vector<std::pair<unsigned, LogReal>> b_sum_series(const SelfMap& f, const ProjPoint& x,
                                                       const Form& F, const std::vector<Int>& S,
                                                       unsigned n_max, unsigned l);

}  // namespace orbitlab
