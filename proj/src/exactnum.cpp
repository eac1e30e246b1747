#include "orbitlab/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>

namespace orbitlab {

namespace {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// 64-bit helpers (fast path used whenever values fit in a machine word)

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller–Rabin for 64-bit inputs: the first twelve primes are
// a valid base set far beyond 2^64.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's cycle variant of Pollard rho on 64-bit words. Deterministic:
// x0 = 2 and the polynomial offset c comes from the caller's schedule.
// Returns 0 when the budget runs out first; `budget` is decremented in place.
std::uint64_t rho_u64(std::uint64_t n, std::uint64_t c, std::uint64_t& budget) {
  const std::uint64_t m = 128;  // gcd batch size
  std::uint64_t y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = (mulmod64(y, y, n) + c) % n;
    for (std::uint64_t k = 0; k < r && g == 1; k += m) {
      ys = y;
      std::uint64_t lim = std::min(m, r - k);
      if (budget < lim) {
        budget = 0;
        return 0;
      }
      budget -= lim;
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = (mulmod64(y, y, n) + c) % n;
        q = mulmod64(q, x > y ? x - y : y - x, n);
      }
      g = gcd64(q, n);
    }
    r <<= 1;
  }
  if (g == n) {
    // Batch overshot: replay from the saved point one step at a time.
    do {
      ys = (mulmod64(ys, ys, n) + c) % n;
      g = gcd64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

void factor_u64(std::uint64_t n, std::uint64_t& rho_budget,
                std::vector<Int>& primes_out, Int& cofactor) {
  std::vector<std::uint64_t> stack{n};
  while (!stack.empty()) {
    std::uint64_t m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime_u64(m)) {
      primes_out.emplace_back(m);
      continue;
    }
    std::uint64_t g = 0;
    for (std::uint64_t c = 1; rho_budget > 0 && g == 0; ++c) g = rho_u64(m, c, rho_budget);
    if (g == 0) {
      cofactor *= m;
      continue;
    }
    stack.push_back(g);
    stack.push_back(m / g);
  }
}

// ---------------------------------------------------------------------------
// Arbitrary-precision Miller–Rabin and rho

// Largest bound for which the first thirteen primes are a proven-complete
// Miller–Rabin base set.
const Int kDeterministicMrBound("3317044064679887385961981");

bool miller_rabin_round(const Int& n, const Int& a, const Int& d, int s) {
  Int x = mp::powm(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

std::uint64_t rho_big(const Int& n, std::uint64_t c, std::uint64_t& budget, Int& out) {
  const std::uint64_t m = 128;
  Int y = 2, q = 1, g = 1, x = 0, ys = 0;
  const Int cc = c;
  std::uint64_t r = 1;
  auto step = [&](Int& v) { v = (v * v + cc) % n; };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += m) {
      ys = y;
      std::uint64_t lim = std::min(m, r - k);
      if (budget < lim) {
        budget = 0;
        return 0;
      }
      budget -= lim;
      for (std::uint64_t i = 0; i < lim; ++i) {
        step(y);
        q = (q * abs(x - y)) % n;
      }
      g = gcd(q, n);
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  if (g == n) return 0;
  out = g;
  return 1;
}

void factor_big(const Int& n, std::uint64_t& rho_budget,
                std::vector<Int>& primes_out, Int& cofactor) {
  std::vector<Int> stack{n};
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (m <= std::numeric_limits<std::uint64_t>::max()) {
      factor_u64(static_cast<std::uint64_t>(m), rho_budget, primes_out, cofactor);
      continue;
    }
    if (is_probable_prime(m)) {
      primes_out.push_back(m);
      continue;
    }
    Int g;
    std::uint64_t found = 0;
    for (std::uint64_t c = 1; rho_budget > 0 && found == 0; ++c) found = rho_big(m, c, rho_budget, g);
    if (found == 0) {
      cofactor *= m;
      continue;
    }
    stack.push_back(g);
    stack.push_back(m / g);
  }
}

}  // namespace

Int parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("empty integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw ParseError("bad integer literal: '" + std::string(text) + "'");
    }
  }
  return Int(std::string(text));
}

Int Factorization::reconstruct() const {
  Int r = cofactor;
  for (const auto& [p, e] : factors) r *= pow(p, e);
  return r;
}

unsigned vp(const Int& n, const Int& p) {
  if (n == 0) throw ZeroInput("vp: zero input");
  if (p < 2) throw Error("vp: modulus must be a prime >= 2");
  Int a = abs(n), q, r;
  unsigned e = 0;
  for (;;) {
    mp::divide_qr(a, p, q, r);
    if (r != 0) return e;
    a = q;
    ++e;
  }
}

Int coprime_part(Int n, const Int& m) {
  if (n < 1 || m < 1) throw Error("coprime_part: arguments must be >= 1");
  Int g = gcd(n, m);
  while (g > 1) {
    n /= g;
    g = gcd(n, g);
  }
  return n;
}

LogReal log_big(const Int& n) {
  if (n < 1) throw NonPositive("log_big: input must be >= 1");
  if (n == 1) return {0.0};
  unsigned m = static_cast<unsigned>(mp::msb(n));  // floor(log2 n)
  if (m < 64) return {std::log(static_cast<double>(static_cast<std::uint64_t>(n)))};
  // ln n = ln(top 64 bits) + (dropped bit count) * ln 2, with the truncation
  // contributing relative error below 2^-63.
  std::uint64_t top = static_cast<std::uint64_t>(n >> (m - 63));
  return {std::log(static_cast<double>(top)) + static_cast<double>(m - 63) * 0.6931471805599453};
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return is_prime_u64(static_cast<std::uint64_t>(n));
  }
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
    if (n % p == 0) return false;  // n > 41^2 here
  }
  Int d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  if (n < kDeterministicMrBound) {
    for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
      if (!miller_rabin_round(n, a, d, s)) return false;
    }
    return true;
  }
  // Above the proven range: 64 rounds, bases seeded deterministically from n.
  std::mt19937_64 rng(0x6f7262697462ull ^ static_cast<std::uint64_t>(n & 0xffffffffffffffffull));
  for (int round = 0; round < 64; ++round) {
    Int a = 2 + Int(rng()) % (n - 3);
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

const std::vector<std::uint32_t>& primes_below(std::uint32_t bound) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<const std::vector<std::uint32_t>>> cache;
  bound = std::clamp<std::uint32_t>(bound, 2u, 1u << 26);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bound);
  if (it != cache.end()) return *it->second;
  std::vector<bool> composite(bound + 1, false);
  auto primes = std::make_unique<std::vector<std::uint32_t>>();
  for (std::uint32_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes->push_back(p);
    for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= bound; q += p) {
      composite[static_cast<std::uint32_t>(q)] = true;
    }
  }
  return *cache.emplace(bound, std::move(primes)).first->second;
}

Factorization factor(const Int& n, const FactorBudget& budget) {
  if (n == 0) throw ZeroInput("factor: zero input");
  Factorization out;
  Int a = abs(n);
  if (a == 1) return out;

  std::vector<Int> found;
  // Trial division. Once p^2 exceeds the remainder, the remainder is prime.
  bool remainder_prime = false;
  for (std::uint32_t p : primes_below(budget.trial_bound)) {
    if (Int(p) * p > a) {
      remainder_prime = true;
      break;
    }
    while (a % p == 0) {
      a /= p;
      found.emplace_back(p);
    }
  }
  if (a > 1) {
    if (remainder_prime) {
      found.push_back(a);
    } else {
      std::uint64_t rho_budget = budget.rho_cap;
      factor_big(a, rho_budget, found, out.cofactor);
    }
  }

  std::sort(found.begin(), found.end());
  for (std::size_t i = 0; i < found.size();) {
    std::size_t j = i;
    while (j < found.size() && found[j] == found[i]) ++j;
    out.factors.emplace_back(found[i], static_cast<unsigned>(j - i));
    i = j;
  }
  return out;
}

Int strip_primes(Int n, const std::vector<Int>& primes) {
  if (n == 0) throw ZeroInput("strip_primes: zero input");
  for (const Int& p : primes) {
    if (p < 2) throw Error("strip_primes: primes must be >= 2");
    while (n % p == 0) n /= p;
  }
  return n;
}

}  // namespace orbitlab
