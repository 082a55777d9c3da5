#include "locdiv/integers.hpp"

#include <algorithm>
#include <array>

namespace locdiv {

long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
  return static_cast<long>(mpz_remove(Int().get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::pair<long, Int> split_valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("split_valuation: n must be nonzero");
  Int rest;
  long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
  return {v, rest};
}

namespace {

bool strong_probable_prime(const Int& n, const Int& base) {
  // n odd, > 2, base not divisible by n
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Int x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const std::array<long, 9> small_bases = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (long b : small_bases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  // bases 2..23 decide every n below this bound exactly
  static const Int kDeterministicBound("3825123056546413051");
  if (n < kDeterministicBound) {
    for (long b : small_bases) {
      if (!strong_probable_prime(n, Int(b))) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int next_prime_above(const Int& n) {
  Int c = n + 1;
  if (c <= 2) return 2;
  if (c % 2 == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor of odd composite n.
Int brent_rho(const Int& n, unsigned long seed) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  while (true) {
    Int y = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 3) + 1;
    Int m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int lim = std::min(m, Int(r - k));
        for (Int i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
    ++seed;  // rare: retry with fresh parameters
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out);

void factor_cofactor(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // perfect powers first: cheap and common for class computations
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = 2; ; ++e) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        std::map<Int, unsigned> sub;
        factor_cofactor(root, sub);
        for (auto& [p, m] : sub) out[p] += m * static_cast<unsigned>(e);
        return;
      }
      if (pow_int(Int(2), e) > n) break;
    }
  }
  Int d = brent_rho(n, 0xC0FFEE);
  factor_cofactor(d, out);
  factor_cofactor(n / d, out);
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  Int m = abs(n);
  if (m == 0) throw std::invalid_argument("factor: n must be nonzero");
  static const std::vector<long> small = primes_up_to(100000);
  for (long p : small) {
    if (m == 1) return;
    if (Int(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++out[Int(p)];
    }
  }
  factor_cofactor(m, out);
}

}  // namespace

std::map<Int, unsigned> factor(const Int& n) {
  std::map<Int, unsigned> out;
  factor_into(n, out);
  return out;
}

Int squarefree_part(const Int& n) {
  if (n == 0) throw std::invalid_argument("squarefree_part: n must be nonzero");
  Int m = abs(n);
  Int out = n < 0 ? -1 : 1;
  if (m == 1) return out;
  // strip small primes, then try to shortcut the cofactor
  static const std::vector<long> small = primes_up_to(100000);
  for (long p : small) {
    if (m == 1) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  if (m == 1) return out;
  if (is_perfect_square(m)) return out;
  if (is_prime(m)) return out * m;
  for (auto& [p, e] : factor(m)) {
    if (e % 2) out *= p;
  }
  return out;
}

Int cubefree_part(const Int& n) {
  if (n == 0) throw std::invalid_argument("cubefree_part: n must be nonzero");
  Int out = n < 0 ? -1 : 1;
  for (auto& [p, e] : factor(abs(n))) {
    out *= pow_int(p, e % 3);
  }
  return out;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Int> exact_cbrt(const Int& n) {
  Int root;
  int exact = mpz_root(root.get_mpz_t(), abs(n).get_mpz_t(), 3);
  if (!exact) return std::nullopt;
  return n < 0 ? -root : root;
}

Int pow_mod(const Int& base, const Int& exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Int inv_mod(const Int& a, const Int& mod) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::domain_error("inv_mod: element not invertible");
  }
  return r;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
  for (long i = 2; i <= bound; ++i) {
    if (!sieve[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j <= bound; j += i) sieve[static_cast<size_t>(j)] = false;
  }
  return out;
}

}  // namespace locdiv
