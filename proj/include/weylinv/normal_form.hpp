#pragma once

#include <map>
#include <string>
#include <utility>

#include "weylinv/laurent.hpp"
#include "weylinv/registry.hpp"

namespace weylinv {

/// Z_p[x4, x8, y10, x20, y22, x36]; coefficients live here with x4 inverted.
RingRef make_mtilde_ring(std::uint32_t p = 3);

/// f = sum over slots (i, j) of coeff(i, j) * t^i * h12^j with 0 <= i <= 8,
/// 0 <= j <= 2.  Only nonzero slots are stored.
struct NormalForm {
  std::map<std::pair<int, int>, LaurentPoly> slots;

  bool is_zero() const { return slots.empty(); }
  bool only_constant_slot() const;
  /// Largest power of x4 in a denominator.
  int max_shift() const;
};

std::string to_string(const NormalForm& nf);

/// Rewrites elements of H into the t^i h12^j basis.  Uses
/// h16 = (x20 - h12 x8)/x4 and the two rules of rewrite_rules.txt
/// (t^9 x4 = ..., h12^3 = ...).  Each rewrite lowers i + 3j of the terms it
/// touches, so one sweep from the top weight down terminates.
class NormalFormEngine {
 public:
  explicit NormalFormEngine(const Registry& reg);

  const RingRef& coefficient_ring() const { return mtilde_; }
  const Registry& registry() const { return reg_; }

  /// Throws VerificationError with a witness term when allow_x4_inverse is
  /// false and a coefficient keeps a power of x4 in its denominator.
  NormalForm reduce(const Poly& f, bool allow_x4_inverse = true) const;

  /// x4^k * sum coeff(i, j) t^i h12^j as an element of H; k >= max_shift.
  Poly reexpand(const NormalForm& nf, int k) const;
  /// Image of a coefficient-ring polynomial in H.
  Poly coefficient_to_h(const Poly& m) const;

  /// True iff the normal form sits entirely in slot (0, 0).
  bool is_weyl_invariant(const Poly& f) const;

 private:
  const Registry& reg_;
  RingRef mtilde_;
  RingRef mixed_;  // t, h12, then the coefficient variables
  Poly t9_rhs_;    // t^9 x4 = t9_rhs_
  Poly h12cube_rhs_;
  std::vector<Poly> mixed_in_h_;
};

}  // namespace weylinv
