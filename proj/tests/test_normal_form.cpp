#include <doctest.h>

#include "support.hpp"
#include "weylinv/error.hpp"
#include "weylinv/normal_form.hpp"
#include "weylinv/registry.hpp"

using namespace weylinv;

namespace {

const NormalFormEngine& engine() {
  static const NormalFormEngine e(Registry::standard());
  return e;
}

Poly hv(const char* name) { return Registry::standard().require_h(name); }

}  // namespace

TEST_SUITE("normal_form") {
  TEST_CASE("reduced monomials stay in their slot") {
    NormalForm nf = engine().reduce(hv("t").pow(3) * hv("h12").pow(2));
    REQUIRE(nf.slots.size() == 1);
    auto it = nf.slots.find({3, 2});
    REQUIRE(it != nf.slots.end());
    CHECK(it->second == LaurentPoly(Poly::constant(engine().coefficient_ring(), 1), 0, 0));
  }

  TEST_CASE("t^9 and h12^3 re-expand to themselves") {
    for (const Poly& f : {hv("t").pow(9), hv("h12").pow(3), hv("h16") * hv("t").pow(8)}) {
      NormalForm nf = engine().reduce(f);
      int k = nf.max_shift();
      CHECK(engine().reexpand(nf, k) == f * hv("x4").pow(k));
    }
    NormalForm cube = engine().reduce(hv("h12").pow(3));
    auto it = cube.slots.find({0, 0});
    REQUIRE(it != cube.slots.end());
    std::size_t x36 = engine().coefficient_ring()->require_index("x36");
    bool has_x36 = false;
    for (const Term& t : it->second.numerator().terms()) has_x36 = has_x36 || t.mono[x36] > 0;
    CHECK(has_x36);
  }

  TEST_CASE("round trip on random elements") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 40; ++k) {
      Poly f = test::random_poly(Registry::standard().h(), rng, 15, 6);
      NormalForm nf = engine().reduce(f);
      int s = nf.max_shift();
      CHECK(engine().reexpand(nf, s) == f * hv("x4").pow(s));
    }
  }

  TEST_CASE("x4 denominators are reported when not allowed") {
    CHECK_THROWS_AS(engine().reduce(hv("h16"), false), VerificationError);
    CHECK_NOTHROW(engine().reduce(hv("h16") * hv("x4"), false));
  }

  TEST_CASE("invariance through the normal form") {
    CHECK(engine().is_weyl_invariant(hv("x48")));
    CHECK(engine().is_weyl_invariant(hv("x20") * hv("y22")));
    CHECK_FALSE(engine().is_weyl_invariant(hv("t")));
    CHECK_FALSE(engine().is_weyl_invariant(hv("h12")));
    NormalForm nf = engine().reduce(hv("h12"));
    CHECK(nf.slots.count({0, 1}) == 1);
  }
}
