#pragma once

#include <optional>
#include <vector>

#include "orbitlab/exactnum.hpp"
#include "orbitlab/projective.hpp"

namespace orbitlab {

/// A place of Q: the archimedean absolute value or a prime p.
class Place {
 public:
  static Place infinite() { return Place({}); }
  static Place finite(Int p) { return Place(std::move(p)); }

  bool is_infinite() const { return !p_.has_value(); }
  const Int& prime() const;

 private:
  explicit Place(std::optional<Int> p) : p_(std::move(p)) {}
  std::optional<Int> p_;
};

/// log max|x_i| on normalized coordinates. Always >= 0, and 0 exactly on
/// points with all coordinates in {-1, 0, 1}.
LogReal naive_height(const ProjPoint& x);

/// Local height of x against the hypersurface {F = 0} at place v, computed
/// on normalized coordinates:
///   infinite place:  deg F * log max|x_i| - log|F(x)|
///   finite place p:  vp(F(x)) * log p
/// Nonnegative either way; throws OnSupport when F(x) = 0.
LogReal local_height_form(const Form& F, const ProjPoint& x, const Place& v);

/// Finite-place contribution of a subscheme as an exact weight: value() is
/// weight * log p.
struct LocalFiniteHeight {
  Int p;
  unsigned weight = 0;
  LogReal value() const;
};

/// min over generators of vp(F_i(x)); OnSupport when every generator
/// vanishes at x.
LocalFiniteHeight subscheme_local_finite(const Subscheme& Y, const ProjPoint& x, const Int& p);

/// min over generators of the per-form local height (generators vanishing at
/// x drop out of the min as +infinity). OnSupport when all vanish.
LogReal subscheme_local_height(const Subscheme& Y, const ProjPoint& x, const Place& v);

/// Global height split into its archimedean part and the exact integer M
/// carrying every finite contribution at once: sum_p vp(M) log p = log M.
/// M = gcd over generators of |F_i(x)|, so no prime is ever factored out.
struct GlobalHeight {
  LogReal arch;
  Int finite_mult = 1;
  LogReal total() const { return arch + log_big(finite_mult); }
};

/// Sum of all local heights. Throws InfiniteHeight when x lies on Y.
GlobalHeight subscheme_global_height(const Subscheme& Y, const ProjPoint& x);

/// The primes outside S showing up in the finite part, with the truncated
/// value sum_{p | M, p not in S} log p (each prime counted once).
struct TruncatedCount {
  std::vector<Int> primes;
  LogReal value;
};

/// Factors the finite multiplicity after stripping S; BudgetExceeded when
/// the factorization does not complete, InfiniteHeight when x lies on Y.
TruncatedCount truncated_counting(const Subscheme& Y, const ProjPoint& x,
                                  const std::vector<Int>& S, const FactorBudget& budget = {});

}  // namespace orbitlab
