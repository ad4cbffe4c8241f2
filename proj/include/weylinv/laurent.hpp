#pragma once

#include <string>

#include "weylinv/poly.hpp"

namespace weylinv {

/// numerator * v^(-shift) for one designated variable v; every other
/// variable keeps non-negative exponents.  Canonical form has the
/// smallest shift >= 0.
class LaurentPoly {
 public:
  LaurentPoly(RingRef ring, std::size_t var);
  LaurentPoly(Poly numerator, std::size_t var, int shift = 0);

  const Poly& numerator() const { return num_; }
  int shift() const { return shift_; }
  std::size_t inverted_variable() const { return var_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return shift_ == 0; }
  const Ring& ring() const { return num_.ring(); }

  /// Polynomial value; throws if a negative power remains.
  Poly to_poly() const;
  /// numerator * v^(k - shift); requires k >= shift.
  Poly cleared(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly times_power(int k) const;  // multiply by v^k, k may be negative
  LaurentPoly scaled(Coeff c) const;
  bool operator==(const LaurentPoly& o) const;

 private:
  void normalize();
  void check_compatible(const LaurentPoly& o) const;

  Poly num_;
  std::size_t var_;
  int shift_ = 0;
};

std::string to_string(const LaurentPoly& f);

}  // namespace weylinv
