#pragma once

#include <cstdint>

#include "weylinv/error.hpp"

namespace weylinv {

using Coeff = std::uint32_t;

/// Arithmetic in GF(p) for primes below 2^16, so products fit in 32 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return (a * b) % p_; }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const;

  /// Signed representative in (-p/2, p/2].
  std::int64_t centered(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  static bool is_prime(std::uint32_t n);

 private:
  std::uint32_t p_;
};

}  // namespace weylinv
