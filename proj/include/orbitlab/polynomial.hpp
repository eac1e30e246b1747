#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitlab/bigint.hpp"
#include "orbitlab/errors.hpp"

namespace orbitlab {

// Dense univariate polynomial over exact integers, lowest-degree coefficient
// first. Doubles as a binary form on P^1 via sum c_i s^i t^(D-i) <-> sum
// c_i x^i, with the formal degree D carried by the caller (the vector drops
// leading zeros, so D - degree() is the multiplicity of the root at (1:0)).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Int> coeffs);
  static Poly constant(Int c);
  static Poly monomial(Int c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }

  Int content() const;       // gcd of |coefficients|, 0 for the zero poly
  Poly primitive() const;    // content divided out, leading coefficient > 0
  Poly derivative() const;
  Int eval(const Int& x) const;
  std::string str() const;   // for diagnostics

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Int& s);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Int> c_;
};

// Quotient a / b when b divides a exactly over the integers; throws Error
// otherwise. try_exact_div is the non-throwing probe.
Poly exact_div(const Poly& a, const Poly& b);
std::optional<Poly> try_exact_div(const Poly& a, const Poly& b);

// A positive power of lc(b) times (a mod b): zero or of degree < deg b.
Poly pseudo_rem(const Poly& a, const Poly& b);

// Primitive gcd with positive leading coefficient (primitive-PRS chain).
Poly poly_gcd(Poly a, Poly b);

// Resultant of two binary forms given as full-length coefficient vectors
// (formal degree = size - 1; leading entries may be zero). Fraction-free
// Bareiss elimination on the Sylvester matrix.
Int sylvester_resultant(const std::vector<Int>& f, const std::vector<Int>& g);

}  // namespace orbitlab
