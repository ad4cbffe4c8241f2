#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "weylinv/poly.hpp"

namespace weylinv {

struct OracleLimits {
  /// Largest slice C(d+5, 5) the oracle will touch.
  std::size_t max_monomials = 300'000;

  /// Defaults, overridden by WEYLINV_ORACLE_CAP when set.
  static OracleLimits from_env();
};

struct SliceResult {
  int degree = 0;                // polynomial degree d
  std::size_t monomials = 0;     // C(d+5, 5)
  std::size_t d5_dimension = 0;  // nonzero signed orbit sums
  std::size_t dimension = 0;     // W(E6)-invariants
  std::vector<Poly> basis;       // filled when requested
};

/// dim of the W(E6)-invariants in degree d of Z_p[t, t1..t5], by linear
/// algebra only.  The reflections come straight from the rational root
/// data.  R2..R6 are signed permutations, so their joint invariants are
/// spanned by orbit sums of monomials with trivial sign character; R1 - id
/// is then eliminated on that span.
class DimensionOracle {
 public:
  explicit DimensionOracle(std::uint32_t p = 3, OracleLimits limits = OracleLimits::from_env());

  const RingRef& ring() const { return ring_; }

  SliceResult solve(int d, bool want_basis) const;
  std::size_t invariant_dimension(int d) const { return solve(d, false).dimension; }
  std::vector<Poly> sample_invariant_basis(int d) const { return solve(d, true).basis; }

  /// Dimensions for polynomial degrees 0..max_degree, computed on `jobs`
  /// threads.
  std::vector<SliceResult> sweep(int max_degree, unsigned jobs = 1) const;

 private:
  struct SignedPermutation {
    std::array<int, 6> target{};  // variable k goes to +-var target[k]
    std::array<bool, 6> negate{};
  };

  RingRef ring_;
  OracleLimits limits_;
  std::vector<SignedPermutation> d5_;
  std::vector<Poly> r1_images_;
};

/// C(d + 5, 5), saturating at SIZE_MAX.
std::size_t slice_size(int d);

}  // namespace weylinv
