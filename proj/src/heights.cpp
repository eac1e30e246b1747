#include "orbitlab/heights.hpp"

#include <algorithm>

namespace orbitlab {

const Int& Place::prime() const {
  if (!p_) throw Error("the infinite place has no prime");
  return *p_;
}

LogReal LocalFiniteHeight::value() const {
  LogReal lp = log_big(p);
  return {static_cast<double>(weight) * lp.value};
}

namespace {

Int max_abs_coord(const ProjPoint& x) {
  Int mx = 0;
  for (const Int& c : x.coords()) mx = std::max(mx, Int(abs(c)));
  return mx;
}

void check_space(const Subscheme& Y, const ProjPoint& x) {
  if (Y.generators.empty()) throw Error("subscheme with no generators");
  if (Y.generators[0].num_vars() != x.dim() + 1) {
    throw DimensionMismatch("subscheme/point dimension mismatch");
  }
}

}  // namespace

LogReal naive_height(const ProjPoint& x) { return log_big(max_abs_coord(x)); }

LogReal local_height_form(const Form& F, const ProjPoint& x, const Place& v) {
  Int val = eval_form(F, x);
  if (val == 0) throw OnSupport("point lies on {" + F.str() + " = 0}");
  if (v.is_infinite()) {
    return static_cast<double>(F.degree()) * naive_height(x) - log_big(abs(val));
  }
  // Coordinates are coprime, so min_i vp(x_i) = 0 and the local height is
  // exactly the valuation of the evaluated form.
  return LocalFiniteHeight{v.prime(), vp(val, v.prime())}.value();
}

LocalFiniteHeight subscheme_local_finite(const Subscheme& Y, const ProjPoint& x, const Int& p) {
  check_space(Y, x);
  std::optional<unsigned> w;
  for (const Form& F : Y.generators) {
    Int val = eval_form(F, x);
    if (val == 0) continue;  // +infinity: drops out of the min
    unsigned e = vp(val, p);
    if (!w || e < *w) w = e;
    if (*w == 0) break;
  }
  if (!w) throw OnSupport("point lies on the subscheme");
  return {p, *w};
}

LogReal subscheme_local_height(const Subscheme& Y, const ProjPoint& x, const Place& v) {
  check_space(Y, x);
  if (!v.is_infinite()) return subscheme_local_finite(Y, x, v.prime()).value();
  std::optional<LogReal> mn;
  for (const Form& F : Y.generators) {
    if (eval_form(F, x) == 0) continue;
    LogReal h = local_height_form(F, x, v);
    if (!mn || h < *mn) mn = h;
  }
  if (!mn) throw OnSupport("point lies on the subscheme");
  return *mn;
}

GlobalHeight subscheme_global_height(const Subscheme& Y, const ProjPoint& x) {
  check_space(Y, x);
  // Finite part: vp(gcd_i F_i(x)) = min_i vp(F_i(x)) for every p at once,
  // so the single integer gcd carries the whole finite sum exactly.
  // (gcd with 0 is the identity, so vanishing generators drop out here too.)
  Int m = 0;
  std::optional<LogReal> arch;
  double log_mx = naive_height(x).value;
  for (const Form& F : Y.generators) {
    Int val = eval_form(F, x);
    if (val == 0) continue;
    m = gcd(m, val);
    LogReal h{static_cast<double>(F.degree()) * log_mx - log_big(abs(val)).value};
    if (!arch || h < *arch) arch = h;
  }
  if (!arch) throw InfiniteHeight("height of a point on the subscheme");
  return {*arch, abs(m)};
}

TruncatedCount truncated_counting(const Subscheme& Y, const ProjPoint& x,
                                  const std::vector<Int>& S, const FactorBudget& budget) {
  GlobalHeight h = subscheme_global_height(Y, x);
  Int m = strip_primes(h.finite_mult, S);
  Factorization f = factor(m, budget);
  if (!f.complete()) {
    throw BudgetExceeded("finite multiplicity " + m.str() + " resisted the factor budget");
  }
  TruncatedCount out;
  out.value = {0.0};
  for (const auto& [p, e] : f.factors) {
    out.primes.push_back(p);
    out.value += log_big(p);
  }
  return out;
}

}  // namespace orbitlab
