#include <doctest.h>

#include <set>

#include "weylinv/root_system.hpp"
#include "weylinv/sigma.hpp"
#include "weylinv/weyl_action.hpp"

using namespace weylinv;

namespace {

RationalVector unit(int k) {
  RationalVector v = RationalVector::Zero();
  v(k) = 1;
  return v;
}

}  // namespace

TEST_SUITE("root_system") {
  TEST_CASE("simple reflections on fundamental weights") {
    RootSystemE6 rs;
    CHECK((RationalVector(rs.reflection(6) * rs.beta(6)) == rs.beta(5) - rs.beta(6)));
    CHECK((rs.tau(5) == rs.beta(5) - rs.beta(6)));
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j)
        if (i != j) CHECK((RationalVector(rs.reflection(i) * rs.beta(j)) == rs.beta(j)));
  }

  TEST_CASE("reflections are involutions preserving the pairing") {
    RootSystemE6 rs;
    for (int i = 1; i <= 6; ++i) {
      CHECK((RationalMatrix(rs.reflection(i) * rs.reflection(i)) == RationalMatrix::Identity()));
      CHECK(rs.preserves_pairing(i));
    }
  }

  TEST_CASE("group orders") {
    RootSystemE6 rs;
    CHECK(rs.enumerate_group({1, 2, 3, 4, 5, 6}).order == 51840);
    CHECK(rs.enumerate_group({2, 3, 4, 5, 6}).order == 1920);
    CHECK(rs.enumerate_group({6}).order == 2);
    CHECK_THROWS(rs.enumerate_group({1, 2, 3, 4, 5, 6}, 1000));
  }

  TEST_CASE("t-basis coordinates") {
    RootSystemE6 rs;
    CHECK((rs.to_t_basis(rs.beta(1)) == unit(0)));
    RationalVector b6 = unit(5);
    b6(0) = Rational(1, 2);
    CHECK((rs.to_t_basis(rs.beta(6)) == b6));
    RingRef base = make_base_ring();
    Poly x = RootSystemE6::linear_form(rs.to_t_basis(rs.x()), base);
    CHECK(x == parse_poly(base, "-t1 - t2 - t3 - t4 - t5"));
  }

  TEST_CASE("the 27 weights") {
    RootSystemE6 rs;
    auto ws = rs.weight_set();
    std::set<std::string> S;
    for (const auto& w : ws) S.insert(to_string(w));
    CHECK(S.size() == 27);
    for (int i = 1; i <= 6; ++i)
      for (const auto& w : ws) CHECK(S.count(to_string(RationalVector(rs.reflection(i) * w))) == 1);
    for (const auto& start : {ws.front(), ws.back()}) {
      std::set<std::string> orbit;
      for (const auto& w : rs.orbit(start, {1, 2, 3, 4, 5, 6})) orbit.insert(to_string(w));
      CHECK(orbit == S);
    }
    std::set<std::string> reduced;
    for (const auto& f : weight_forms(make_base_ring(3))) reduced.insert(to_string(f));
    CHECK(reduced.size() == 27);
  }

  TEST_CASE("both labelings of the weight set agree mod 3") {
    // {x - w_i, -x - w_i} against {c1 - w_i, -c1 - w_i}, with x = -c1 mod 3.
    RootSystemE6 rs;
    RingRef base = make_base_ring(3);
    Poly c1 = parse_poly(base, "t1 + t2 + t3 + t4 + t5");
    std::set<std::string> with_x, with_c1;
    for (const auto& f : weight_forms(base)) with_x.insert(to_string(f));
    for (int i = 1; i < 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        with_c1.insert(to_string(RootSystemE6::linear_form(rs.to_t_basis(rs.w(i) + rs.w(j)), base)));
    for (int i = 1; i <= 6; ++i) {
      Poly wi = RootSystemE6::linear_form(rs.to_t_basis(rs.w(i)), base);
      with_c1.insert(to_string(c1 - wi));
      with_c1.insert(to_string(-c1 - wi));
    }
    CHECK(with_x == with_c1);
  }
}
