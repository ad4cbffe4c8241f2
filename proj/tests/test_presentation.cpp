#include <doctest.h>

#include "weylinv/catalog.hpp"
#include "weylinv/presentation.hpp"
#include "weylinv/registry.hpp"

using namespace weylinv;

namespace {

Poly hv(const char* name) { return Registry::standard().require_h(name); }

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("rational series expansion") {
    GradedSeries s = expand_rational(parse_int_poly("1"), {4}, 12);
    CHECK(s.coeffs == std::vector<std::int64_t>{1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1});
    GradedSeries u = expand_rational(parse_int_poly("1 - t^4"), {4}, 12);
    CHECK(u.at(0) == 1);
    for (int d = 1; d <= 12; ++d) CHECK(u.at(d) == 0);
  }

  TEST_CASE("closed forms agree and start as expected") {
    GradedSeries a = closed_form_series("generators", 100), b = closed_form_series("module", 100);
    CHECK(a == b);
    CHECK(a.at(0) == 1);
    CHECK(a.at(2) == 0);
    CHECK(a.at(4) == 1);
    CHECK(a.at(8) == 2);
    CHECK(a.at(20) == 5);
    for (int d = 1; d <= 100; d += 2) CHECK(a.at(d) == 0);
    CHECK_THROWS(closed_form_series("nonsense", 10));
  }

  TEST_CASE("free-module presentation with the y22 family") {
    const Registry& reg = Registry::standard();
    CHECK(presentation_series(y22_family_presentation(), reg, 100) == closed_form_series("generators", 100));
    CHECK(generator_degree("x20*y22", reg) == 42);
  }

  TEST_CASE("leading forms under w") {
    WeightAssignment w = weight_w();
    Poly h18 = leading_form(hv("h18"), w);
    CHECK(h18 == hv("t").pow(9) - hv("t").pow(3) * hv("h12") + hv("t") * hv("h16"));
    CHECK(leading_form(hv("y22"), w) == -(hv("x4") * h18));
    CHECK(leading_form(hv("x36"), w) == hv("h12").pow(3));
  }

  TEST_CASE("leading form of y76 under v") {
    WeightAssignment v = weight_v();
    Poly h18 = leading_form(hv("h18"), v);
    Poly displayed = hv("x8") * hv("x4").pow(2) * hv("h12").pow(2) * h18.pow(2);
    Poly actual = leading_form(hv("y76"), v);
    CHECK(actual != displayed);
    CHECK(actual == hv("x8").pow(2) * hv("h12").pow(2) * h18.pow(2));
  }

  TEST_CASE("module generators have distinct leading supports") {
    const Registry& reg = Registry::standard();
    SupportCheck a = module_generator_supports(y22_family_presentation(), weight_w(), reg);
    CHECK(a.leading_forms.size() == 14);
    CHECK(a.ok());
    SupportCheck b = module_generator_supports(y26_family_presentation(), weight_v(), reg);
    CHECK(b.leading_forms.size() == 14);
    CHECK(b.ok());
  }

  TEST_CASE("weights parse with an infinite entry") {
    WeightAssignment v = parse_weights("1 inf 6 7 9 9");
    REQUIRE(v.size() == 6);
    CHECK_FALSE(v[1].has_value());
    CHECK(v[2] == 6);
  }
}
