#pragma once

#include <utility>
#include <vector>

#include "orbitlab/polynomial.hpp"
#include "orbitlab/projective.hpp"

namespace orbitlab {

inline constexpr unsigned kDefaultDegreeCap = 4096;

/// Multiplicity profile of a polynomial (or binary form): pairs
/// (multiplicity k, degree of the multiplicity-k squarefree part), k
/// ascending, degrees >= 1. Summing k * deg_k recovers the full degree.
struct MultiplicityProfile {
  std::vector<std::pair<unsigned, unsigned>> parts;

  unsigned total_degree() const;
  unsigned max_multiplicity() const;  // 0 for an empty profile
};

/// Yun's squarefree decomposition over the integers (content is irrelevant
/// to the profile and stripped first). Throws ZeroPolynomial on 0.
MultiplicityProfile yun_squarefree(const Poly& p);

/// The primitive squarefree factors themselves: (k, A_k) with
/// prod A_k^k = p up to a rational constant.
std::vector<std::pair<unsigned, Poly>> yun_factors(const Poly& p);

/// Same profile for rational coefficient input (lowest degree first);
/// denominators are cleared exactly.
MultiplicityProfile yun_squarefree_rational(const std::vector<Rat>& coeffs);

/// n-th iterate of a P^1 self-map as a pair of binary forms of the stated
/// formal degree, with common integer content removed at each step.
/// Throws MapDegenerate when the components share a root (resultant zero)
/// and IterateOverflow when deg^n would exceed the cap.
struct BinaryIterate {
  Poly f0, f1;            // index i = coefficient of s^i t^(D - i)
  unsigned formal_degree; // D = deg(f)^n
};
BinaryIterate iterate_binary_forms(const SelfMap& f, unsigned n,
                                   unsigned degree_cap = kDefaultDegreeCap);

/// y1 * F_n - y0 * G_n: the binary form (of the iterate's formal degree)
/// whose roots are the n-th preimages of y, with multiplicities.
Poly fiber_form(const BinaryIterate& it, const ProjPoint& y);

/// Multiplicity profile of the fiber over y, point at infinity included
/// (so the total degree is exactly deg(f)^n).
MultiplicityProfile fiber_profile(const BinaryIterate& it, const ProjPoint& y);

/// Ramification index of f at the rational point x: the multiplicity of x
/// in the fiber over f(x). Between 1 and deg f.
unsigned ram_index(const SelfMap& f, const ProjPoint& x);

/// Largest multiplicity in the n-th backward fiber over y.
unsigned backward_sup_mult(const SelfMap& f, const ProjPoint& y, unsigned n,
                           unsigned degree_cap = kDefaultDegreeCap);

/// (n, backward_sup_mult^(1/n)) for n = 1..n_max; the composition is built
/// incrementally so the whole series costs one pass.
std::vector<std::pair<unsigned, double>> e_minus_series(const SelfMap& f, const ProjPoint& y,
                                                        unsigned n_max,
                                                        unsigned degree_cap = kDefaultDegreeCap);

/// Product of the ramification indices along x, f(x), ..., f^{n-1}(x):
/// the multiplicity of x in the fiber of f^n over f^n(x), by the chain rule.
Int e_plus_rational(const SelfMap& f, const ProjPoint& x, unsigned n);

/// Per-point sup-multiplicity series plus the running estimate
/// max over points of the n_max-th root value.
struct PointSetMultiplicity {
  struct PerPoint {
    ProjPoint point;
    std::vector<std::pair<unsigned, double>> series;
  };
  std::vector<PerPoint> per_point;
  double estimate = 1.0;
};
PointSetMultiplicity e_of_point_set(const SelfMap& f, const std::vector<ProjPoint>& points,
                                    unsigned n_max, unsigned degree_cap = kDefaultDegreeCap);

}  // namespace orbitlab
