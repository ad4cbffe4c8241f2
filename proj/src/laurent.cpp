#include "weylinv/laurent.hpp"

#include <algorithm>

namespace weylinv {

LaurentPoly::LaurentPoly(RingRef ring, std::size_t var) : num_(std::move(ring)), var_(var) {
  if (var_ >= num_.ring().size()) throw StructuralError("inverted variable out of range");
}

LaurentPoly::LaurentPoly(Poly numerator, std::size_t var, int shift)
    : num_(std::move(numerator)), var_(var), shift_(shift) {
  if (var_ >= num_.ring().size()) throw StructuralError("inverted variable out of range");
  normalize();
}

void LaurentPoly::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    return;
  }
  int low = 255;
  for (const auto& t : num_.terms()) low = std::min<int>(low, t.mono.e[var_]);
  // A negative shift is folded into the numerator.
  int k = shift_ < 0 ? 0 : std::min(low, shift_);
  if (shift_ < 0) {
    Monomial m;
    m.e[var_] = static_cast<std::uint8_t>(-shift_);
    num_ = num_.times_monomial(m);
    shift_ = 0;
    return;
  }
  if (k > 0) {
    std::vector<Term> terms(num_.terms().begin(), num_.terms().end());
    for (auto& t : terms) t.mono.e[var_] -= k;
    num_ = Poly::from_sorted(num_.ring_ptr(), std::move(terms));
    shift_ -= k;
  }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  require_same_ring(ring(), o.ring());
  if (var_ != o.var_) throw StructuralError("Laurent operands invert different variables");
}

Poly LaurentPoly::to_poly() const {
  if (shift_ != 0) throw StructuralError("Laurent element has a negative power");
  return num_;
}

Poly LaurentPoly::cleared(int k) const {
  if (k < shift_) throw StructuralError("clearing power below the shift");
  if (k == shift_) return num_;
  Monomial m;
  m.e[var_] = static_cast<std::uint8_t>(k - shift_);
  return num_.times_monomial(m);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  r.num_ = -num_;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o);
  int k = std::max(shift_, o.shift_);
  num_ = cleared(k) + o.cleared(k);
  shift_ = k;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_compatible(o);
  int k = std::max(shift_, o.shift_);
  num_ = cleared(k) - o.cleared(k);
  shift_ = k;
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_compatible(o);
  return LaurentPoly(num_ * o.num_, var_, shift_ + o.shift_);
}

LaurentPoly LaurentPoly::times_power(int k) const { return LaurentPoly(num_, var_, shift_ - k); }

LaurentPoly LaurentPoly::scaled(Coeff c) const { return LaurentPoly(num_.scaled(c), var_, shift_); }

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  check_compatible(o);
  return shift_ == o.shift_ && num_ == o.num_;
}

std::string to_string(const LaurentPoly& f) {
  std::string s = to_string(f.numerator());
  if (f.shift() == 0) return s;
  const auto& v = f.ring().var(f.inverted_variable()).name;
  return "(" + s + ")*" + v + "^-" + std::to_string(f.shift());
}

}  // namespace weylinv
