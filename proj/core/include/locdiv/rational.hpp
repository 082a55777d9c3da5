#pragma once

#include <gmpxx.h>

#include "locdiv/integers.hpp"

namespace locdiv {

// Exact rationals, always stored reduced with positive denominator
// (mpq_class canonicalization guarantees both).
using Rat = mpq_class;

// num/den with den != 0, canonicalized.
Rat make_rat(const Int& num, const Int& den);

// Parses "n" or "n/d" with optional sign.
Rat parse_rat(const std::string& text);

long valuation(const Rat& q, const Int& p);  // q != 0

// The p-unit part of q as a residue in [1, p^k) coprime to p:
// q = p^v * u with u = num'/den', returns num' * den'^-1 mod p^k.
Int unit_residue(const Rat& q, const Int& p, int k);

// Exact membership in (Q^x)^2 / (Q^x)^3.
bool is_square_rational(const Rat& q);
bool is_cube_rational(const Rat& q);

// Canonical squarefree representative of q modulo rational squares.
Int square_class(const Rat& q);

}  // namespace locdiv
