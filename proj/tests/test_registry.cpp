#include <doctest.h>

#include <set>

#include "weylinv/catalog.hpp"
#include "weylinv/error.hpp"
#include "weylinv/registry.hpp"
#include "weylinv/weyl_action.hpp"

using namespace weylinv;

TEST_SUITE("registry") {
  TEST_CASE("record parsing") {
    auto recs = parse_records("# c\n[a]\nlhs: x +\n  y\nk: v\n\n[b]\nlhs: z\n", "t.txt");
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].id == "a");
    CHECK(recs[0].require("lhs") == "x + y");
    CHECK(recs[1].get("k") == std::nullopt);
    CHECK_THROWS_AS(recs[1].require("k"), ParseError);
    CHECK_THROWS_AS(parse_records("lhs: x\n", "t.txt"), ParseError);
  }

  TEST_CASE("expression helpers") {
    ExprPtr e = parse_expr("x4^2*y10 - 2*x8 + h12/x4");
    CHECK(names_in(e) == std::vector<std::string>{"x4", "y10", "x8", "h12"});
    CHECK(summands(e).size() == 3);
    CHECK(summands(e)[1].negative);
    const Registry& reg = Registry::standard();
    CHECK(homogeneous_degree(parse_expr("x4*x8 + y10*t"), reg.degree_lookup()) == 6);
    CHECK(homogeneous_degree(parse_expr("x4 + x8"), reg.degree_lookup()) == std::nullopt);
  }

  TEST_CASE("every definition only uses names defined before it") {
    const Registry& reg = Registry::standard();
    std::set<std::string> seen{"t", "t1", "t2", "t3", "t4", "t5", "c1", "c2", "c3", "c4", "c5", "p1", "p2", "p3", "p4"};
    for (const auto& e : reg.elements()) {
      if (e.expr)
        for (const auto& n : names_in(e.expr)) CHECK_MESSAGE(seen.count(n), e.name << " uses " << n);
      seen.insert(e.name);
    }
  }

  TEST_CASE("small values and degrees") {
    const Registry& reg = Registry::standard();
    RingRef B = reg.base();
    CHECK(reg.base_value("x4") == parse_poly(B, "t1^2 + t2^2 + t3^2 + t4^2 + t5^2"));
    CHECK(reg.base_value("b") == parse_poly(B, "2*t1 + t2 + t3 + t4 + t5"));
    CHECK(reg.degree("y76") == 38);
    CHECK(reg.degree("x4") == 2);
    for (const auto& g : generator_names()) CHECK(reg.h_value(g) != nullptr);
  }

  TEST_CASE("values through H agree with direct evaluation") {
    const Registry& reg = Registry::standard();
    for (const char* n : {"x20", "y22", "y26", "h18", "g24", "x36"})
      CHECK_MESSAGE(reg.base_from_definition(n) == reg.base_value(n), n);
  }

  TEST_CASE("smaller generators are fixed by each D5 reflection") {
    const Registry& reg = Registry::standard();
    WeylAction act(reg.base());
    for (const char* n : {"x4", "x8", "y10", "x20", "y22", "y26", "x36"})
      for (int i = 2; i <= 6; ++i) CHECK_MESSAGE(act.is_invariant(reg.base_value(n), {i}), n << " R" << i);
  }
}
