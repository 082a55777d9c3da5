#pragma once

#include <optional>
#include <string>

#include "locdiv/integers.hpp"

namespace locdiv {

// A completion of Q: either the real place or a finite prime.
// Finite places are primality-tested on construction, so holding a Place
// is proof of primality everywhere downstream.
class Place {
 public:
  static Place real();
  static Place finite(Int p);  // throws std::invalid_argument unless p is prime

  bool is_real() const { return !p_.has_value(); }
  bool is_finite() const { return p_.has_value(); }
  const Int& prime() const;  // throws std::logic_error at the real place

  std::string str() const;

  friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
  friend bool operator<(const Place& a, const Place& b);

 private:
  Place() = default;
  std::optional<Int> p_;
};

}  // namespace locdiv
