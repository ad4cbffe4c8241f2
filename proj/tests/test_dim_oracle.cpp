#include <doctest.h>

#include "weylinv/dim_oracle.hpp"
#include "weylinv/error.hpp"
#include "weylinv/presentation.hpp"
#include "weylinv/weyl_action.hpp"

using namespace weylinv;

namespace {

const DimensionOracle& oracle() {
  static const DimensionOracle o(3);
  return o;
}

}  // namespace

TEST_SUITE("dim_oracle") {
  TEST_CASE("small degrees") {
    CHECK(oracle().invariant_dimension(0) == 1);
    CHECK(oracle().invariant_dimension(1) == 0);
    CHECK(oracle().invariant_dimension(2) == 1);
    std::vector<Poly> b0 = oracle().sample_invariant_basis(0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == Poly::constant(oracle().ring(), b0[0].terms().front().coeff));
  }

  TEST_CASE("degree 2 is spanned by a multiple of the sum of squares") {
    std::vector<Poly> b = oracle().sample_invariant_basis(2);
    REQUIRE(b.size() == 1);
    Poly p1 = parse_poly(oracle().ring(), "t1^2 + t2^2 + t3^2 + t4^2 + t5^2");
    bool multiple = false;
    for (int c : {1, 2}) multiple = multiple || b[0] == p1 * Poly::constant(oracle().ring(), c);
    CHECK(multiple);
  }

  TEST_CASE("degree 10 has five invariants, matching the series") {
    CHECK(oracle().invariant_dimension(10) == 5);
    CHECK(closed_form_series("generators", 20).at(20) == 5);
  }

  TEST_CASE("basis vectors are invariant and bounded by the slice size") {
    WeylAction act(oracle().ring());
    for (int d : {3, 4, 6, 7}) {
      SliceResult r = oracle().solve(d, true);
      CHECK(r.basis.size() == r.dimension);
      CHECK(r.dimension <= r.d5_dimension);
      CHECK(r.d5_dimension <= slice_size(d));
      CHECK(r.monomials == slice_size(d));
      for (const Poly& f : r.basis) CHECK(act.is_invariant(f, kAllGenerators));
    }
  }

  TEST_CASE("sweep agrees with single slices") {
    std::vector<SliceResult> s = oracle().sweep(8, 2);
    REQUIRE(s.size() == 9);
    for (int d = 0; d <= 8; ++d) CHECK(s[d].dimension == oracle().invariant_dimension(d));
  }

  TEST_CASE("slice cap") {
    CHECK(slice_size(0) == 1);
    CHECK(slice_size(2) == 21);
    OracleLimits tiny;
    tiny.max_monomials = 10;
    DimensionOracle small(3, tiny);
    CHECK_NOTHROW(small.invariant_dimension(1));
    CHECK_THROWS(small.invariant_dimension(5));
  }
}
