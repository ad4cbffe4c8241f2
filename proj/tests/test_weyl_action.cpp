#include <doctest.h>

#include "support.hpp"
#include "weylinv/registry.hpp"
#include "weylinv/weyl_action.hpp"

using namespace weylinv;

TEST_SUITE("weyl_action") {
  TEST_CASE("reflections are involutive ring endomorphisms") {
    RingRef R = make_base_ring();
    WeylAction act(R);
    std::mt19937_64 rng(21);
    for (int i = 1; i <= 6; ++i)
      for (int k = 0; k < 8; ++k) {
        Poly f = test::random_poly(R, rng, 4, 6), g = test::random_poly(R, rng, 4, 6);
        CHECK(act.apply(i, act.apply(i, f)) == f);
        CHECK(act.apply(i, f * g) == act.apply(i, f) * act.apply(i, g));
      }
  }

  TEST_CASE("tabulated images agree with the root data") {
    RingRef R = make_base_ring(3);
    for (int i = 1; i <= 6; ++i) CHECK(WeylAction::tabulated_images(i, R) == WeylAction::derived_images(i, R));
  }

  TEST_CASE("images of single variables") {
    RingRef R = make_base_ring();
    WeylAction act(R);
    CHECK(act.apply(1, parse_poly(R, "t")) == parse_poly(R, "t - t1 - (t1 + t2 + t3 + t4 + t5)"));
    CHECK(act.apply(3, parse_poly(R, "t1")) == parse_poly(R, "t2"));
    CHECK(act.apply(2, parse_poly(R, "t1")) == parse_poly(R, "-t2"));
  }

  TEST_CASE("the D5 reflections fix the squares tower and c5") {
    const Registry& reg = Registry::standard();
    WeylAction act(reg.base());
    for (const char* name : {"p1", "p2", "p3", "p4", "c5", "t"})
      CHECK(act.is_invariant(reg.base_value(name), kD5Generators));
  }

  TEST_CASE("invariance with witnesses") {
    const Registry& reg = Registry::standard();
    WeylAction act(reg.base());
    CHECK(act.is_invariant(reg.base_value("x4"), kAllGenerators));

    InvarianceResult t = act.check_invariant(reg.base_value("t"), {1});
    CHECK_FALSE(t.invariant);
    CHECK(t.failing_generator == 1);
    CHECK(*t.residual == -reg.base_value("b"));

    InvarianceResult d8 = act.check_invariant(reg.base_value("d8"), {1});
    CHECK_FALSE(d8.invariant);
    CHECK(*d8.residual == reg.base_value("d8"));

    Poly d = reg.base_value("d8"), x8 = reg.base_value("x8"), h16 = reg.base_value("h16");
    InvarianceResult g24 = act.check_invariant(reg.base_value("g24"), {1});
    CHECK(*g24.residual == d.pow(3) - d * d * x8 - d * h16 + d * x8 * x8);
  }

  TEST_CASE("R1 on h12, h16 and h18") {
    const Registry& reg = Registry::standard();
    WeylAction act(reg.base());
    Poly d8 = reg.base_value("d8");
    auto moved = [&](const char* n) { return act.apply(1, reg.base_value(n)) - reg.base_value(n); };
    CHECK(moved("h12") == d8 * reg.base_value("x4"));
    CHECK(moved("h16") == -(d8 * reg.base_value("x8")));
    CHECK(moved("h18") == d8 * reg.base_value("y10"));
  }
}
