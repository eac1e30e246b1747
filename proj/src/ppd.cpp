#include "orbitlab/ppd.hpp"

#include <string>

namespace orbitlab {

namespace {

// Running product of every |F(f^m x)| seen so far, kept only for its prime
// support. Below the size threshold the plain product is exact; past it,
// each new value contributes only its new-prime part, which bounds growth
// without losing any support.
class SupportAccumulator {
 public:
  Int new_part(const Int& v) const { return coprime_part(v, acc_); }

  void add(const Int& v) {
    if (bit_length(acc_) <= kPlainBits) {
      acc_ *= v;
    } else {
      acc_ *= coprime_part(v, acc_);
    }
  }

 private:
  static constexpr unsigned kPlainBits = 1u << 14;
  Int acc_ = 1;
};

// |F| along the orbit, with the on-divisor check done once up front.
std::vector<Int> divisor_values(const SelfMap& f, const ProjPoint& x, const Form& F,
                                unsigned n_max) {
  if (F.num_vars() != f.dim() + 1) {
    throw DimensionMismatch("divisor form does not live in the map's space");
  }
  std::vector<ProjPoint> orbit = iterate(f, x, n_max);
  std::vector<Int> values;
  values.reserve(orbit.size());
  for (unsigned n = 0; n <= n_max; ++n) {
    Int v = abs(eval_form(F, orbit[n]));
    if (v == 0) {
      throw OnSupport("orbit lies on the divisor at step " + std::to_string(n));
    }
    values.push_back(std::move(v));
  }
  return values;
}

}  // namespace

std::vector<std::pair<unsigned, bool>> ppd_exists(const SelfMap& f, const ProjPoint& x,
                                                  const Form& F, const std::vector<Int>& S,
                                                  unsigned n_max) {
  std::vector<Int> values = divisor_values(f, x, F, n_max);
  SupportAccumulator seen;
  std::vector<std::pair<unsigned, bool>> out;
  out.reserve(values.size());
  for (unsigned n = 0; n <= n_max; ++n) {
    Int fresh = strip_primes(seen.new_part(values[n]), S);
    out.emplace_back(n, fresh > 1);
    seen.add(values[n]);
  }
  return out;
}

std::vector<PpdReport> ppd_primes(const SelfMap& f, const ProjPoint& x, const Form& F,
                                  const std::vector<Int>& S, unsigned n_max,
                                  const FactorBudget& budget) {
  std::vector<Int> values = divisor_values(f, x, F, n_max);
  SupportAccumulator seen;
  std::vector<PpdReport> out;
  out.reserve(values.size());
  for (unsigned n = 0; n <= n_max; ++n) {
    Int fresh = strip_primes(seen.new_part(values[n]), S);
    PpdReport rep;
    rep.n = n;
    rep.exists = fresh > 1;
    rep.b_value = log_big(fresh);
    Factorization fac = factor(fresh, budget);
    if (fac.complete()) {
      std::vector<PpdPrime> primes;
      primes.reserve(fac.factors.size());
      for (const auto& [p, e] : fac.factors) primes.push_back({p, e});
      rep.primitive_primes = std::move(primes);
      rep.method = PpdMethod::factorization;
    }
    out.push_back(std::move(rep));
    seen.add(values[n]);
  }
  return out;
}

std::vector<std::pair<unsigned, LogReal>> b_sum_series(const SelfMap& f, const ProjPoint& x,
                                                       const Form& F, const std::vector<Int>& S,
                                                       unsigned n_max, unsigned l) {
  std::vector<Int> values = divisor_values(f, x, F, n_max);
  SupportAccumulator excluded;  // holds steps m <= n - l - 1
  std::vector<std::pair<unsigned, LogReal>> out;
  out.reserve(values.size());
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n >= l + 1) excluded.add(values[n - l - 1]);
    Int fresh = strip_primes(excluded.new_part(values[n]), S);
    out.emplace_back(n, log_big(fresh));
  }
  return out;
}

LogReal b_sum(const SelfMap& f, const ProjPoint& x, const Form& F, const std::vector<Int>& S,
              unsigned n, unsigned l) {
  if (l >= n) throw Error("window sum needs 0 <= l < n");
  return b_sum_series(f, x, F, S, n, l).back().second;
}

}  // namespace orbitlab
