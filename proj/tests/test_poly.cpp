#include <doctest.h>

#include "support.hpp"
#include "weylinv/error.hpp"
#include "weylinv/laurent.hpp"
#include "weylinv/registry.hpp"
#include "weylinv/weyl_action.hpp"

using namespace weylinv;

TEST_SUITE("poly") {
  TEST_CASE("addition is exact mod 3") {
    RingRef R = make_base_ring();
    Poly t = Poly::variable(R, "t");
    CHECK((t + t.scaled(2)).is_zero());
    Poly f = parse_poly(R, "t1 + t2");
    CHECK(f + Poly(R) == f);
    CHECK(to_string(parse_poly(R, "t1 + t2") + parse_poly(R, "t2 + t3")) == to_string(parse_poly(R, "t1 + 2*t2 + t3")));
  }

  TEST_CASE("Frobenius on a cube") {
    RingRef R = make_base_ring();
    CHECK(parse_poly(R, "t1 + t2").pow(3) == parse_poly(R, "t1^3 + t2^3"));
    Poly f = parse_poly(R, "t*t1 + 2*t3^2");
    CHECK(f * Poly::constant(R, 1) == f);
  }

  TEST_CASE("text round trip and canonical printing") {
    RingRef R = make_base_ring();
    Poly f = parse_poly(R, "-t1^2 + t*t5 - 1");
    CHECK(parse_poly(R, to_string(f)) == f);
    CHECK(to_string(Poly(R)) == "0");
    CHECK(to_string(f).find('-') == std::string::npos);
    CHECK_THROWS_AS(parse_poly(R, "t7"), ParseError);
  }

  TEST_CASE("ring axioms on random inputs") {
    RingRef R = make_base_ring();
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
      Poly a = test::random_poly(R, rng, 4, 6), b = test::random_poly(R, rng, 4, 6),
           c = test::random_poly(R, rng, 4, 6);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a + b).pow(3) == a.pow(3) + b.pow(3));
    }
  }

  TEST_CASE("substitution is a ring homomorphism") {
    RingRef R = make_base_ring();
    std::mt19937_64 rng(12);
    std::vector<Poly> images;
    for (std::size_t i = 0; i < R->size(); ++i) images.push_back(test::random_poly(R, rng, 2, 3));
    for (int k = 0; k < 20; ++k) {
      Poly f = test::random_poly(R, rng, 3, 5), g = test::random_poly(R, rng, 3, 5);
      CHECK(substitute(f * g, images) == substitute(f, images) * substitute(g, images));
    }
    SUBCASE("identity map") {
      std::vector<Poly> id;
      for (std::size_t i = 0; i < R->size(); ++i) id.push_back(Poly::variable(R, i));
      Poly f = test::random_poly(R, rng, 5, 8);
      CHECK(substitute(f, id) == f);
    }
    SUBCASE("t squared under t -> t1 + t2") {
      std::vector<Poly> m = {parse_poly(R, "t1 + t2")};
      for (std::size_t i = 1; i < R->size(); ++i) m.push_back(Poly::variable(R, i));
      CHECK(substitute(parse_poly(R, "t^2"), m) == parse_poly(R, "t1^2 + 2*t1*t2 + t2^2"));
    }
  }

  TEST_CASE("exact division") {
    RingRef R = make_base_ring();
    std::mt19937_64 rng(13);
    for (int k = 0; k < 20; ++k) {
      Poly f = test::random_poly(R, rng, 4, 6), g = test::random_poly(R, rng, 3, 4);
      if (g.is_zero()) continue;
      DivisionResult q = exact_divide(f * g, g);
      REQUIRE(q.divisible());
      CHECK(*q.quotient == f);
    }
    Poly f = parse_poly(R, "t^2 + t1");
    CHECK(*exact_divide(f, Poly::constant(R, 1)).quotient == f);
    DivisionResult bad = exact_divide(parse_poly(R, "t^2 + t1"), parse_poly(R, "t"));
    CHECK_FALSE(bad.divisible());
    CHECK(bad.witness.has_value());
  }

  TEST_CASE("y26 as a quotient in the base ring") {
    const Registry& reg = Registry::standard();
    Poly num = reg.base_value("x20") * reg.base_value("y10") - reg.base_value("y22") * reg.base_value("x8");
    DivisionResult q = exact_divide(num, reg.base_value("x4"));
    REQUIRE(q.divisible());
    CHECK(*q.quotient == reg.base_value("y26"));
  }

  TEST_CASE("graded components partition a polynomial") {
    RingRef R = make_base_ring();
    std::mt19937_64 rng(14);
    Poly f = test::random_poly(R, rng, 6, 12);
    Poly sum(R);
    for (int d = 0; d <= 12; d += 2) {
      Poly c = graded_component(f, d);
      CHECK((c.is_zero() || c.is_homogeneous()));
      sum += c;
    }
    CHECK(sum == f);
    const Registry& reg = Registry::standard();
    Poly g = Poly::constant(reg.h(), 1) + reg.require_h("x4") + reg.require_h("x8");
    CHECK(graded_component(g, 8) == reg.require_h("x8"));
  }

  TEST_CASE("leading forms under the two weightings") {
    const Registry& reg = Registry::standard();
    WeightAssignment w = {0, 1, 2, 3, 0, 0};
    WeightAssignment v = {1, std::nullopt, 6, 7, 9, 9};
    Poly x20 = reg.require_h("x20");
    CHECK(leading_form(x20, w) == reg.require_h("x4") * reg.require_h("h16"));
    CHECK(leading_form(x20, v) == reg.require_h("x8") * reg.require_h("h12"));
    CHECK(leading_form(reg.require_h("x4"), w) == reg.require_h("x4"));
  }

  TEST_CASE("Laurent polynomials normalize their shift") {
    RingRef R = make_base_ring();
    Poly t = Poly::variable(R, "t"), t1 = Poly::variable(R, "t1");
    LaurentPoly a(t * t * t1, 0, 3);  // t1 / t
    CHECK(a.shift() == 1);
    CHECK(a.numerator() == t1);
    CHECK(a.times_power(1).to_poly() == t1);
    CHECK_THROWS(a.to_poly());
  }
}
