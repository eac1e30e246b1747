#include "orbitlab/mult1.hpp"

#include <algorithm>
#include <cmath>

namespace orbitlab {

unsigned MultiplicityProfile::total_degree() const {
  unsigned t = 0;
  for (auto [k, deg] : parts) t += k * deg;
  return t;
}

unsigned MultiplicityProfile::max_multiplicity() const {
  unsigned m = 0;
  for (auto [k, deg] : parts) m = std::max(m, k);
  return m;
}

std::vector<std::pair<unsigned, Poly>> yun_factors(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<unsigned, Poly>> out;
  Poly b = p.primitive();
  if (b.degree() == 0) return out;
  // Yun's algorithm. Every division below is exact over the integers: the
  // gcds are primitive, so Gauss's lemma keeps the quotients integral.
  Poly d = b.derivative();
  Poly g = poly_gcd(b, d);
  Poly c = exact_div(d, g);
  b = exact_div(b, g);
  Poly e = c - b.derivative();
  for (unsigned k = 1; b.degree() > 0; ++k) {
    Poly a = poly_gcd(b, e);
    if (a.degree() > 0) out.emplace_back(k, a);
    b = exact_div(b, a);
    c = exact_div(e, a);
    e = c - b.derivative();
  }
  return out;
}

MultiplicityProfile yun_squarefree(const Poly& p) {
  MultiplicityProfile profile;
  for (const auto& [k, a] : yun_factors(p)) {
    profile.parts.emplace_back(k, static_cast<unsigned>(a.degree()));
  }
  if (profile.total_degree() != static_cast<unsigned>(std::max(p.degree(), 0))) {
    throw Error("squarefree profile lost degree");  // unreachable unless Yun broke
  }
  return profile;
}

MultiplicityProfile yun_squarefree_rational(const std::vector<Rat>& coeffs) {
  Int common = 1;
  for (const Rat& r : coeffs) {
    common = boost::multiprecision::lcm(common, Int(boost::multiprecision::denominator(r)));
  }
  std::vector<Int> cleared;
  cleared.reserve(coeffs.size());
  for (const Rat& r : coeffs) {
    cleared.push_back(Int(boost::multiprecision::numerator(r)) *
                      (common / Int(boost::multiprecision::denominator(r))));
  }
  return yun_squarefree(Poly(std::move(cleared)));
}

namespace {

// Binary form of a P^1 self-map component as a coefficient vector in the
// univariate disguise: index i = coefficient of s^i t^(d - i).
Poly dense_component(const Form& F) {
  std::vector<Int> c(F.degree() + 1, Int(0));
  for (const auto& [e, coeff] : F.terms()) c[e[0]] = coeff;
  return Poly(std::move(c));
}

void require_p1(const SelfMap& f) {
  if (f.dim() != 1) throw DimensionMismatch("multiplicity machinery works on P^1 maps");
}

void require_morphism(const SelfMap& f) {
  require_p1(f);
  if (!check_morphism_p1(f)) {
    throw MapDegenerate("components share a root: " + f.str());
  }
}

// One composition step: evaluate the degree-d component form on the binary
// forms (A, B) of common formal degree D; the result has formal degree d*D.
Poly compose_component(const Form& F, const std::vector<Poly>& pow_a,
                       const std::vector<Poly>& pow_b, unsigned d) {
  Poly sum;
  for (const auto& [e, c] : F.terms()) {
    sum = sum + pow_a[e[0]] * pow_b[d - e[0]] * c;
  }
  return sum;
}

// Incrementally maintained iterate, so a whole series costs one composition
// chain instead of one per n.
struct Composer {
  const SelfMap& f;
  unsigned d;
  unsigned degree_cap;
  BinaryIterate it{Poly::monomial(Int(1), 1), Poly::constant(Int(1)), 1};  // identity (s : t)

  Composer(const SelfMap& f_, unsigned cap) : f(f_), d(f_.degree()), degree_cap(cap) {
    require_morphism(f);
  }

  void advance() {
    if (Int(it.formal_degree) * d > degree_cap) {
      throw IterateOverflow("iterate degree " + (Int(it.formal_degree) * d).str() +
                            " exceeds the cap of " + std::to_string(degree_cap));
    }
    std::vector<Poly> pow_a{Poly::constant(Int(1))}, pow_b{Poly::constant(Int(1))};
    for (unsigned k = 1; k <= d; ++k) {
      pow_a.push_back(pow_a.back() * it.f0);
      pow_b.push_back(pow_b.back() * it.f1);
    }
    Poly next0 = compose_component(f.components()[0], pow_a, pow_b, d);
    Poly next1 = compose_component(f.components()[1], pow_a, pow_b, d);
    // Only the *common* content is a unit of the map; per-component content
    // would change it.
    Int g = gcd(next0.content(), next1.content());
    if (g > 1) {
      next0 = exact_div(next0, Poly::constant(g));
      next1 = exact_div(next1, Poly::constant(g));
    }
    it.f0 = std::move(next0);
    it.f1 = std::move(next1);
    it.formal_degree *= d;
  }
};

}  // namespace

BinaryIterate iterate_binary_forms(const SelfMap& f, unsigned n, unsigned degree_cap) {
  Composer comp(f, degree_cap);
  for (unsigned step = 0; step < n; ++step) comp.advance();
  return std::move(comp.it);
}

Poly fiber_form(const BinaryIterate& it, const ProjPoint& y) {
  if (y.dim() != 1) throw DimensionMismatch("fiber points live on P^1");
  Poly p = it.f0 * y[1] - it.f1 * y[0];
  // A morphism iterate is never proportional to a constant pair.
  if (p.is_zero()) throw MapDegenerate("fiber form vanished identically");
  return p;
}

MultiplicityProfile fiber_profile(const BinaryIterate& it, const ProjPoint& y) {
  Poly p = fiber_form(it, y);
  MultiplicityProfile profile;
  if (p.degree() > 0) profile = yun_squarefree(p);
  unsigned at_infinity = it.formal_degree - static_cast<unsigned>(std::max(p.degree(), 0));
  if (at_infinity > 0) {
    auto pos = std::lower_bound(profile.parts.begin(), profile.parts.end(),
                                std::make_pair(at_infinity, 0u));
    if (pos != profile.parts.end() && pos->first == at_infinity) {
      pos->second += 1;
    } else {
      profile.parts.insert(pos, {at_infinity, 1u});
    }
  }
  if (profile.total_degree() != it.formal_degree) {
    throw Error("fiber profile does not fill the formal degree");
  }
  return profile;
}

unsigned ram_index(const SelfMap& f, const ProjPoint& x) {
  require_morphism(f);
  if (x.dim() != 1) throw DimensionMismatch("ram_index wants a point of P^1");
  ProjPoint y = apply(f, x);
  Poly p = dense_component(f.components()[0]) * y[1] - dense_component(f.components()[1]) * y[0];
  const unsigned d = f.degree();
  unsigned mult = 0;
  if (x[1] == 0) {
    // x = (1:0): multiplicity of the root at infinity under the formal degree.
    mult = d - static_cast<unsigned>(std::max(p.degree(), 0));
  } else {
    Poly linear(std::vector<Int>{-x[0], x[1]});  // x1*s - x0*t, primitive
    for (auto q = try_exact_div(p, linear); q; q = try_exact_div(p, linear)) {
      p = std::move(*q);
      ++mult;
    }
  }
  if (mult == 0 || mult > d) throw Error("ramification index out of range");
  return mult;
}

unsigned backward_sup_mult(const SelfMap& f, const ProjPoint& y, unsigned n, unsigned degree_cap) {
  return fiber_profile(iterate_binary_forms(f, n, degree_cap), y).max_multiplicity();
}

std::vector<std::pair<unsigned, double>> e_minus_series(const SelfMap& f, const ProjPoint& y,
                                                        unsigned n_max, unsigned degree_cap) {
  Composer comp(f, degree_cap);
  std::vector<std::pair<unsigned, double>> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    comp.advance();
    unsigned m = fiber_profile(comp.it, y).max_multiplicity();
    out.emplace_back(n, std::pow(static_cast<double>(m), 1.0 / n));
  }
  return out;
}

Int e_plus_rational(const SelfMap& f, const ProjPoint& x, unsigned n) {
  require_morphism(f);
  Int product = 1;
  ProjPoint cur = x;
  for (unsigned i = 0; i < n; ++i) {
    product *= ram_index(f, cur);
    cur = apply(f, cur);
  }
  return product;
}

PointSetMultiplicity e_of_point_set(const SelfMap& f, const std::vector<ProjPoint>& points,
                                    unsigned n_max, unsigned degree_cap) {
  if (points.empty()) throw Error("e_of_point_set needs at least one point");
  if (n_max == 0) throw Error("e_of_point_set needs n_max >= 1");
  // One composition chain serves every point.
  Composer comp(f, degree_cap);
  PointSetMultiplicity out;
  for (const ProjPoint& y : points) out.per_point.push_back({y, {}});
  for (unsigned n = 1; n <= n_max; ++n) {
    comp.advance();
    for (auto& pp : out.per_point) {
      unsigned m = fiber_profile(comp.it, pp.point).max_multiplicity();
      pp.series.emplace_back(n, std::pow(static_cast<double>(m), 1.0 / n));
    }
  }
  out.estimate = 0.0;
  for (const auto& pp : out.per_point) {
    out.estimate = std::max(out.estimate, pp.series.back().second);
  }
  return out;
}

}  // namespace orbitlab
