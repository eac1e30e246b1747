#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orbitlab/bigint.hpp"
#include "orbitlab/errors.hpp"

namespace orbitlab {

/// Point of P^N(Q) held in normalized integer coordinates: coprime, first
/// nonzero coordinate positive. Normalization makes representatives unique,
/// which the finite-place height machinery relies on.
class ProjPoint {
 public:
  /// Normalize raw homogeneous coordinates. Throws AllZero when every
  /// coordinate vanishes and DimensionMismatch for fewer than two of them.
  static ProjPoint normalize(std::vector<Int> raw);

  /// Parse "(a:b:c)" or "a:b:c" with decimal integer entries.
  static ProjPoint parse(std::string_view text);

  unsigned dim() const { return static_cast<unsigned>(c_.size()) - 1; }  // N
  const std::vector<Int>& coords() const { return c_; }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  std::string str() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  ProjPoint() = default;
  std::vector<Int> c_;
};

/// Homogeneous form with integer coefficients in variables x0..x{v-1},
/// kept as a sorted sparse list of (exponent vector, coefficient) terms.
/// Always nonzero and honestly homogeneous by construction.
class Form {
 public:
  using Term = std::pair<std::vector<unsigned>, Int>;

  /// Parse e.g. "x0^2 + 3*x1*x2 - 2*x2^2". Grammar: signed terms joined by
  /// +/-, each term a '*'-product of integer literals and powers xI^E.
  /// Throws ParseError on malformed input, inhomogeneity, or cancellation
  /// to the zero form.
  static Form parse(std::string_view text, unsigned num_vars);
  static Form from_terms(unsigned num_vars, std::vector<Term> terms);

  unsigned num_vars() const { return num_vars_; }
  unsigned degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Term count times the largest |coefficient|: an evaluation bound with
  /// |F(x)| <= height_constant() * max|x_i|^degree.
  Int height_constant() const;

  std::string str() const;  // canonical: terms in descending exponent order

  friend bool operator==(const Form&, const Form&) = default;

 private:
  Form() = default;
  unsigned num_vars_ = 0;
  unsigned degree_ = 0;
  std::vector<Term> terms_;
};

/// Evaluate on the normalized coordinates of x (exact integer).
Int eval_form(const Form& F, const ProjPoint& x);
Int eval_form_raw(const Form& F, const std::vector<Int>& coords);

/// Finitely many forms cutting out a closed subset of P^N, with a label for
/// reporting. Generators must share num_vars (degrees may differ).
struct Subscheme {
  std::string label;
  std::vector<Form> generators;

  static Subscheme make(std::string label, std::vector<Form> generators);
};

/// Self-map of P^N given by N+1 forms of a common degree >= 1.
class SelfMap {
 public:
  static SelfMap from_components(std::vector<Form> components);
  static SelfMap parse(const std::vector<std::string>& component_texts);

  unsigned dim() const { return static_cast<unsigned>(components_.size()) - 1; }
  unsigned degree() const { return components_[0].degree(); }
  const std::vector<Form>& components() const { return components_; }
  std::string str() const;

 private:
  SelfMap() = default;
  std::vector<Form> components_;
};

/// One application of f. Throws IndeterminatePoint when every component
/// vanishes at x (x lies on the indeterminacy locus).
ProjPoint apply(const SelfMap& f, const ProjPoint& x);

/// x, f(x), ..., f^n_max(x). On indeterminacy at step k the exception
/// carries k in its `step` field.
std::vector<ProjPoint> iterate(const SelfMap& f, const ProjPoint& x, unsigned n_max);

/// For maps of P^1 only (DimensionMismatch otherwise): true exactly when the
/// two components share no root in P^1 over the algebraic closure, decided
/// by the Sylvester resultant.
bool check_morphism_p1(const SelfMap& f);

}  // namespace orbitlab
