#include <doctest.h>

#include <map>

#include "support.hpp"
#include "weylinv/catalog.hpp"
#include "weylinv/registry.hpp"
#include "weylinv/sigma.hpp"
#include "weylinv/weyl_action.hpp"

using namespace weylinv;

namespace {

const Poly& product() {
  static const Poly P = expand_P(Registry::standard().base());
  return P;
}

Poly h(const std::string& text) {
  const Registry& reg = Registry::standard();
  return *evaluate(parse_expr(text), reg.h(), reg.h_lookup()).value;
}

}  // namespace

TEST_SUITE("sigma") {
  TEST_CASE("every graded component of P is fixed by every reflection") {
    WeylAction act(Registry::standard().base());
    for (int j = 0; j <= 27; ++j)
      CHECK_MESSAGE(act.is_invariant(sigma_component(product(), j), kAllGenerators), "j = " << j);
  }

  TEST_CASE("low and top components") {
    const Registry& reg = Registry::standard();
    CHECK(sigma_component(product(), 0) == Poly::constant(reg.base(), 1));
    for (int j = 1; j <= 5; ++j) CHECK(sigma_component(product(), j).is_zero());
    CHECK(lift_to_H(sigma_component(product(), 27), reg) == -reg.require_h("x54"));
    CHECK(lift_to_H(sigma_component(product(), 6), reg) == h("-x4^3 - x4*x8"));
    CHECK(lift_to_H(sigma_component(product(), 24), reg) ==
          h("x48 - x20*x8*y10^2 + x4*x8^3*y10^2 - x4^2*y10^4 + x8*y10^4 + y22*y26"));
    for (int j : {7, 10, 11, 13, 19}) CHECK(sigma_component(product(), j).is_zero());
  }

  TEST_CASE("D5 decomposition inverts substitution") {
    const Registry& reg = Registry::standard();
    RingRef D = make_d5_ring();
    std::vector<Poly> images = d5_images(reg.base());
    std::mt19937_64 rng(31);
    for (int k = 0; k < 15; ++k) {
      Poly f = test::random_poly(D, rng, 8, 5);
      CHECK(decompose_D5_invariant(substitute(f, images)) == f);
    }
    CHECK(decompose_D5_invariant(reg.base_value("x4")) == Poly::variable(D, "p1"));
    Poly fourth = parse_poly(reg.base(), "t1^4 + t2^4 + t3^4 + t4^4 + t5^4");
    CHECK(decompose_D5_invariant(fourth) == parse_poly(D, "p1^2 + p2"));
    CHECK(decompose_D5_invariant(reg.base_value("t") * reg.base_value("x4")) == parse_poly(D, "t*p1"));
    CHECK_THROWS(decompose_D5_invariant(reg.base_value("t1")));
  }

  TEST_CASE("lifts of known elements") {
    const Registry& reg = Registry::standard();
    CHECK(lift_to_H(reg.base_value("x20"), reg) == h("h12*x8 + h16*x4"));
    CHECK(lift_to_H(reg.base_value("x4"), reg) == reg.require_h("x4"));
    CHECK(lift_to_H(reg.base_value("h18"), reg) ==
          h("t*(h16 - x8^2) + t^3*(-h12 + x4*x8) + t^5*x8 - t^7*x4 + t^9"));
  }

  TEST_CASE("the two displayed sigma lists agree where both give an entry") {
    std::map<int, std::string> first, complete;
    for (const auto& e : sigma_entries()) {
      if (e.id.rfind("sigma.short.", 0) == 0) first[e.j] = e.expression;
      if (e.id.rfind("sigma.full.", 0) == 0) complete[e.j] = e.expression;
    }
    CHECK(complete.size() == 27);
    CHECK(complete.count(19) == 1);
    for (const auto& [j, text] : first)
      if (complete.count(j)) CHECK_MESSAGE(h(text) == h(complete[j]), "j = " << j);
  }

  TEST_CASE("the symmetric decomposition of P") {
    CHECK(decompose_symmetric(product()).size() == 2600);
  }
}
