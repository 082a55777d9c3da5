#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace locdiv {

using Int = mpz_class;

// Raised when a bounded computation cannot decide either way.  Callers may
// retry with a larger precision or budget.
struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// v_p(n) for n != 0.  p >= 2 need not be prime.
long valuation(const Int& n, const Int& p);

// Strips all factors of p: returns (v_p(n), n / p^v_p(n)).
std::pair<long, Int> split_valuation(const Int& n, const Int& p);

// Deterministic strong-pseudoprime test with bases 2..23 for
// n < 3'825'123'056'546'413'051 (so every 64-bit input is decided exactly);
// larger inputs fall back to 40 Miller-Rabin rounds.
bool is_prime(const Int& n);

Int next_prime_above(const Int& n);

// prime -> exponent for |n|, n != 0.  Trial division below 100000, then
// perfect-power detection and Brent's cycle rho on the remaining cofactor.
std::map<Int, unsigned> factor(const Int& n);

// The unique squarefree integer (sign included) representing n modulo squares.
Int squarefree_part(const Int& n);

// Cube-free representative with prime exponents reduced into {0,1,2}.
Int cubefree_part(const Int& n);

bool is_perfect_square(const Int& n);

// Exact cube root when n is a perfect cube (negatives allowed).
std::optional<Int> exact_cbrt(const Int& n);

Int pow_mod(const Int& base, const Int& exp, const Int& mod);

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Int inv_mod(const Int& a, const Int& mod);

Int pow_int(const Int& base, unsigned long e);

std::vector<long> primes_up_to(long bound);

}  // namespace locdiv
