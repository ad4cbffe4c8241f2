#include "weylinv/field.hpp"

#include <string>

namespace weylinv {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p))
    throw StructuralError("coefficient field needs a prime below 65536, got " +
                          std::to_string(p));
}

bool PrimeField::is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw StructuralError("inverse of zero in GF(p)");
  return pow(a, p_ - 2);
}

}  // namespace weylinv
