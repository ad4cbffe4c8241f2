#pragma once

#include <optional>
#include <vector>

#include "weylinv/poly.hpp"

namespace weylinv {

/// Z_p[t, t1, ..., t5], every variable of degree 1.
RingRef make_base_ring(std::uint32_t p = 3);

struct InvarianceResult {
  bool invariant = true;
  int failing_generator = 0;     // first generator with R_i f != f
  std::optional<Poly> residual;  // R_i f - f for that generator
};

/// The simple reflections R_1..R_6 as substitutions on the base ring.
/// R_2..R_6 are the signed permutations of t1..t5; R_1 is
///   t -> t - b, t1 -> -t1 + c1, ti -> ti - b (i >= 2), b = t1 + c1
/// in characteristic 3, and the reduction of the rational reflection for
/// other primes.
class WeylAction {
 public:
  explicit WeylAction(RingRef base);

  const RingRef& ring() const { return ring_; }
  const std::vector<Poly>& images(int i) const;
  Poly apply(int i, const Poly& f) const;
  InvarianceResult check_invariant(const Poly& f, const std::vector<int>& generators) const;
  bool is_invariant(const Poly& f, const std::vector<int>& generators) const {
    return check_invariant(f, generators).invariant;
  }

  /// Closed-form images used in characteristic 3.
  static std::vector<Poly> tabulated_images(int i, const RingRef& base);
  /// Images reduced from the exact rational reflection matrices.
  static std::vector<Poly> derived_images(int i, const RingRef& base);

 private:
  RingRef ring_;
  std::vector<std::vector<Poly>> images_;
};

inline const std::vector<int> kAllGenerators{1, 2, 3, 4, 5, 6};
inline const std::vector<int> kD5Generators{2, 3, 4, 5, 6};

}  // namespace weylinv
