#include "locdiv/rational.hpp"

namespace locdiv {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return make_rat(Int(text), 1);
  }
  return make_rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

long valuation(const Rat& q, const Int& p) {
  if (q == 0) throw std::invalid_argument("valuation: q must be nonzero");
  long v = 0;
  if (q.get_num() != 0) v += valuation(q.get_num(), p);
  v -= valuation(q.get_den(), p);
  return v;
}

Int unit_residue(const Rat& q, const Int& p, int k) {
  if (q == 0) throw std::invalid_argument("unit_residue: q must be nonzero");
  if (k <= 0) throw std::invalid_argument("unit_residue: precision must be positive");
  Int mod = pow_int(p, static_cast<unsigned long>(k));
  auto [vn, n] = split_valuation(q.get_num(), p);
  auto [vd, d] = split_valuation(q.get_den(), p);
  (void)vn;
  (void)vd;
  Int u = n % mod * inv_mod(d, mod) % mod;
  if (u < 0) u += mod;
  if (u == 0) u = mod;  // unreachable: n, d coprime to p
  return u;
}

bool is_square_rational(const Rat& q) {
  if (q == 0) throw std::invalid_argument("is_square_rational: q must be nonzero");
  if (q < 0) return false;
  return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

bool is_cube_rational(const Rat& q) {
  if (q == 0) throw std::invalid_argument("is_cube_rational: q must be nonzero");
  return exact_cbrt(q.get_num()).has_value() && exact_cbrt(q.get_den()).has_value();
}

Int square_class(const Rat& q) {
  if (q == 0) throw std::invalid_argument("square_class: q must be nonzero");
  return squarefree_part(q.get_num() * q.get_den());
}

}  // namespace locdiv
