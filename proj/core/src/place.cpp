#include "locdiv/place.hpp"

namespace locdiv {

Place Place::real() { return Place{}; }

Place Place::finite(Int p) {
  if (p < 2 || !is_prime(p)) {
    throw std::invalid_argument("Place::finite: " + p.get_str() + " is not prime");
  }
  Place v;
  v.p_ = std::move(p);
  return v;
}

const Int& Place::prime() const {
  if (!p_) throw std::logic_error("Place::prime: real place has no prime");
  return *p_;
}

std::string Place::str() const {
  return p_ ? p_->get_str() : "real";
}

bool operator<(const Place& a, const Place& b) {
  // real place sorts last
  if (!a.p_) return false;
  if (!b.p_) return true;
  return *a.p_ < *b.p_;
}

}  // namespace locdiv
