#include "orbitlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace orbitlab {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Int c) {
  Poly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

Poly Poly::monomial(Int c, std::size_t degree) {
  Poly p;
  if (c != 0) {
    p.c_.assign(degree + 1, Int(0));
    p.c_.back() = std::move(c);
  }
  return p;
}

const Int& Poly::leading() const {
  if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
  return c_.back();
}

Int Poly::content() const {
  Int g = 0;
  for (const Int& c : c_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Int g = content();
  if (c_.back() < 0) g = -g;
  Poly p;
  p.c_.reserve(c_.size());
  for (const Int& c : c_) p.c_.push_back(c / g);
  return p;
}

Poly Poly::derivative() const {
  Poly p;
  if (c_.size() <= 1) return p;
  p.c_.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) p.c_.push_back(Int(i) * c_[i]);
  p.trim();
  return p;
}

Int Poly::eval(const Int& x) const {
  Int r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    first = false;
    Int a = abs(c_[i]);
    if (a != 1 || i == 0) os << a.str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Int& s) {
  if (s == 0) return {};
  Poly p = a;
  for (Int& c : p.c_) c *= s;
  return p;
}

Poly operator-(const Poly& a) {
  Poly p = a;
  for (Int& c : p.c_) c = -c;
  return p;
}

std::optional<Poly> try_exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.is_zero()) return Poly();
  int da = a.degree(), db = b.degree();
  if (da < db) return std::nullopt;
  std::vector<Int> rem = a.coeffs();
  std::vector<Int> q(da - db + 1, Int(0));
  const Int& lead = b.leading();
  for (int k = da - db; k >= 0; --k) {
    Int& top = rem[k + db];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Int t = top / lead;
    for (int i = 0; i < db; ++i) rem[k + i] -= t * b.coeff(i);
    top = 0;
    q[k] = std::move(t);
  }
  for (const Int& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return Poly(std::move(q));
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw Error("exact_div: " + b.str() + " does not divide " + a.str());
  return *q;
}

Poly pseudo_rem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("pseudo_rem by zero");
  const int db = b.degree();
  const Int& lead = b.leading();
  Poly r = a;
  // Each pass scales by lc(b) once and kills the top term, so the result is
  // lc(b)^j * (a mod b) for some 0 <= j <= deg a - deg b + 1. Callers only
  // rely on proportionality to the true remainder.
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Int t = r.leading();
    r = r * lead - Poly::monomial(std::move(t), k) * b;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.is_zero() ? Poly() : b.primitive();
  if (b.is_zero()) return a.primitive();
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.primitive();
  }
  return a.primitive();
}

Int sylvester_resultant(const std::vector<Int>& f, const std::vector<Int>& g) {
  if (f.empty() || g.empty()) throw Error("resultant needs nonempty coefficient vectors");
  const int m = static_cast<int>(f.size()) - 1;  // formal degree of f
  const int n = static_cast<int>(g.size()) - 1;
  if (m == 0 && n == 0) return 1;
  const int size = m + n;
  // Sylvester matrix: n rows of f's coefficients (high degree first), then m
  // rows of g's, each shifted one column right from the previous row.
  std::vector<std::vector<Int>> a(size, std::vector<Int>(size, Int(0)));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) a[r][r + i] = f[m - i];
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) a[n + r][r + i] = g[n - i];
  }
  // Bareiss fraction-free elimination.
  Int sign = 1, prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < size; ++r) {
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int r = k + 1; r < size; ++r) {
      for (int c = k + 1; c < size; ++c) {
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
      }
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

}  // namespace orbitlab
