#include "orbitlab/projective.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "orbitlab/polynomial.hpp"

namespace orbitlab {

// ---------------------------------------------------------------------------
// ProjPoint

ProjPoint ProjPoint::normalize(std::vector<Int> raw) {
  if (raw.size() < 2) throw DimensionMismatch("projective point needs at least two coordinates");
  Int g = 0;
  for (const Int& c : raw) g = gcd(g, c);
  if (g == 0) throw AllZero("projective point with all coordinates zero");
  for (const Int& c : raw) {
    if (c != 0) {
      if (c < 0) g = -g;
      break;
    }
  }
  ProjPoint p;
  p.c_.reserve(raw.size());
  for (Int& c : raw) p.c_.push_back(c / g);
  return p;
}

ProjPoint ProjPoint::parse(std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](unsigned char ch) { return std::isspace(ch); });
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<Int> raw;
  std::size_t pos = 0;
  while (true) {
    std::size_t colon = s.find(':', pos);
    std::string_view entry(s.data() + pos, (colon == std::string::npos ? s.size() : colon) - pos);
    raw.push_back(parse_bigint(entry));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  return normalize(std::move(raw));
}

std::string ProjPoint::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ':';
    os << c_[i].str();
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Form

namespace {

struct FormScanner {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  Int number() {
    skip_ws();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ParseError("expected a number in form at offset " + std::to_string(i));
    Int v(std::string(s.substr(i, j - i)));
    i = j;
    return v;
  }
  unsigned index() {
    Int v = number();
    if (v > 1'000'000) throw ParseError("variable index out of range");
    return static_cast<unsigned>(v);
  }
};

}  // namespace

Form Form::parse(std::string_view text, unsigned num_vars) {
  if (num_vars < 2) throw ParseError("forms need at least two variables");
  FormScanner sc{text};
  std::map<std::vector<unsigned>, Int> acc;
  bool any_term = false;
  while (!sc.done()) {
    Int sign = 1;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      sc.take();
      if (c == '-') sign = -1;
    } else if (any_term) {
      throw ParseError("expected '+' or '-' between terms");
    }
    // One term: '*'-separated factors, each an integer or xI[^E].
    Int coeff = sign;
    std::vector<unsigned> exps(num_vars, 0);
    bool factor_expected = true;
    while (factor_expected) {
      char f = sc.peek();
      if (f == 'x' || f == 'X') {
        sc.take();
        unsigned idx = sc.index();
        if (idx >= num_vars) {
          throw ParseError("variable x" + std::to_string(idx) + " out of range for " +
                           std::to_string(num_vars) + " variables");
        }
        unsigned e = 1;
        if (sc.peek() == '^') {
          sc.take();
          Int ev = sc.number();
          if (ev > 10'000) throw ParseError("exponent out of range");
          e = static_cast<unsigned>(ev);
        }
        exps[idx] += e;
      } else if (std::isdigit(static_cast<unsigned char>(f))) {
        coeff *= sc.number();
      } else {
        throw ParseError(std::string("unexpected character '") + f + "' in form");
      }
      if (sc.peek() == '*') {
        sc.take();
      } else {
        factor_expected = false;
      }
    }
    acc[std::move(exps)] += coeff;
    any_term = true;
  }
  if (!any_term) throw ParseError("empty form");
  std::vector<Term> terms;
  for (auto& [e, c] : acc) {
    if (c != 0) terms.emplace_back(e, std::move(c));
  }
  return from_terms(num_vars, std::move(terms));
}

Form Form::from_terms(unsigned num_vars, std::vector<Term> terms) {
  std::map<std::vector<unsigned>, Int> acc;
  for (auto& [e, c] : terms) {
    if (e.size() != num_vars) throw DimensionMismatch("term exponent vector has wrong arity");
    acc[e] += c;
  }
  Form F;
  F.num_vars_ = num_vars;
  bool first = true;
  for (auto& [e, c] : acc) {
    if (c == 0) continue;
    unsigned deg = std::accumulate(e.begin(), e.end(), 0u);
    if (first) {
      F.degree_ = deg;
      first = false;
    } else if (deg != F.degree_) {
      throw ParseError("form is not homogeneous");
    }
    F.terms_.emplace_back(e, std::move(c));
  }
  if (F.terms_.empty()) throw ParseError("zero form");
  if (F.degree_ == 0) throw ParseError("constant form");
  return F;
}

Int Form::height_constant() const {
  Int mx = 0;
  for (const auto& [e, c] : terms_) mx = std::max(mx, Int(abs(c)));
  return Int(terms_.size()) * mx;
}

std::string Form::str() const {
  std::ostringstream os;
  // Descending exponent order reads naturally (x0^2 before x1*x2).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool lead = it == terms_.rbegin();
    if (c < 0) {
      os << (lead ? "-" : " - ");
    } else if (!lead) {
      os << " + ";
    }
    Int a = abs(c);
    bool monomial_part = std::any_of(e.begin(), e.end(), [](unsigned k) { return k != 0; });
    if (a != 1 || !monomial_part) os << a.str();
    bool printed = a != 1 || !monomial_part;
    for (unsigned v = 0; v < num_vars_; ++v) {
      if (e[v] == 0) continue;
      if (printed) os << "*";
      printed = true;
      os << "x" << v;
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

Int eval_form_raw(const Form& F, const std::vector<Int>& coords) {
  if (coords.size() != F.num_vars()) throw DimensionMismatch("point/form arity mismatch");
  Int total = 0;
  for (const auto& [e, c] : F.terms()) {
    Int t = c;
    for (unsigned v = 0; v < F.num_vars(); ++v) {
      if (e[v]) t *= pow(coords[v], e[v]);
    }
    total += t;
  }
  return total;
}

Int eval_form(const Form& F, const ProjPoint& x) { return eval_form_raw(F, x.coords()); }

Subscheme Subscheme::make(std::string label, std::vector<Form> generators) {
  if (generators.empty()) throw ParseError("subscheme needs at least one generator");
  for (const Form& g : generators) {
    if (g.num_vars() != generators[0].num_vars()) {
      throw DimensionMismatch("subscheme generators live in different spaces");
    }
  }
  return Subscheme{std::move(label), std::move(generators)};
}

// ---------------------------------------------------------------------------
// SelfMap

SelfMap SelfMap::from_components(std::vector<Form> components) {
  if (components.size() < 2) throw DimensionMismatch("a self-map of P^N needs N+1 >= 2 components");
  for (const Form& c : components) {
    if (c.num_vars() != components.size()) {
      throw DimensionMismatch("component arity does not match the number of components");
    }
    if (c.degree() != components[0].degree()) {
      throw ParseError("self-map components must share one degree");
    }
  }
  if (components[0].degree() == 0) throw ParseError("self-map components must have degree >= 1");
  SelfMap f;
  f.components_ = std::move(components);
  return f;
}

SelfMap SelfMap::parse(const std::vector<std::string>& component_texts) {
  std::vector<Form> comps;
  comps.reserve(component_texts.size());
  for (const std::string& t : component_texts) {
    comps.push_back(Form::parse(t, static_cast<unsigned>(component_texts.size())));
  }
  return from_components(std::move(comps));
}

std::string SelfMap::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << " : ";
    os << components_[i].str();
  }
  os << ']';
  return os.str();
}

ProjPoint apply(const SelfMap& f, const ProjPoint& x) {
  if (x.dim() != f.dim()) throw DimensionMismatch("point/map dimension mismatch");
  std::vector<Int> image;
  image.reserve(f.components().size());
  bool all_zero = true;
  for (const Form& c : f.components()) {
    image.push_back(eval_form(c, x));
    if (image.back() != 0) all_zero = false;
  }
  if (all_zero) throw IndeterminatePoint("map is indeterminate at " + x.str());
  return ProjPoint::normalize(std::move(image));
}

std::vector<ProjPoint> iterate(const SelfMap& f, const ProjPoint& x, unsigned n_max) {
  std::vector<ProjPoint> orbit{x};
  orbit.reserve(n_max + 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    try {
      orbit.push_back(apply(f, orbit.back()));
    } catch (const IndeterminatePoint&) {
      throw IndeterminatePoint("orbit hits the indeterminacy locus at step " + std::to_string(n),
                               static_cast<int>(n));
    }
  }
  return orbit;
}

bool check_morphism_p1(const SelfMap& f) {
  if (f.dim() != 1) throw DimensionMismatch("morphism check is for maps of P^1");
  unsigned d = f.degree();
  // Full-length binary-form coefficient vectors: index i = coefficient of
  // s^i t^(d-i).
  std::vector<Int> c0(d + 1, Int(0)), c1(d + 1, Int(0));
  for (const auto& [e, c] : f.components()[0].terms()) c0[e[0]] = c;
  for (const auto& [e, c] : f.components()[1].terms()) c1[e[0]] = c;
  return sylvester_resultant(c0, c1) != 0;
}

}  // namespace orbitlab
