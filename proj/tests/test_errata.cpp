#include <doctest.h>

#include "weylinv/errata.hpp"
#include "weylinv/error.hpp"
#include "weylinv/registry.hpp"

using namespace weylinv;

TEST_SUITE("errata") {
  TEST_CASE("parsing") {
    ErrataSet e = ErrataSet::parse("# comment\n\na | x4 + x8 | scalar\nb|y10|n|me\n", "mem");
    REQUIRE(e.entries().size() == 2);
    CHECK(e.find("a")->corrected == "x4 + x8");
    CHECK(e.find("a")->author.empty());
    CHECK(e.find("b")->author == "me");
    CHECK(e.find("c") == nullptr);
    CHECK(e.source() == "mem");
    CHECK(to_line(*e.find("b")) == "b | y10 | n | me");
    CHECK(to_line(*e.find("a")) == "a | x4 + x8 | scalar");
  }

  TEST_CASE("malformed tables are rejected") {
    CHECK_THROWS_AS(ErrataSet::parse("a | b\n", "mem"), ParseError);
    CHECK_THROWS_AS(ErrataSet::parse("a | b | c | d | e\n", "mem"), ParseError);
    CHECK_THROWS_AS(ErrataSet::parse(" | b | c\n", "mem"), ParseError);
    CHECK_THROWS_AS(ErrataSet::parse("a | b | c\na | d | e\n", "mem"), ParseError);
    CHECK_THROWS_AS(ErrataSet::load("/nonexistent/errata.txt"), StructuralError);
  }

  TEST_CASE("the shipped table") {
    const ErrataSet& b = ErrataSet::builtin();
    CHECK(b.entries().size() == 12);
    for (const auto& e : b.entries()) CHECK_MESSAGE(e.author == "oracle", e.id);
    CHECK(b.find("rel.y60_y64") != nullptr);
  }

  TEST_CASE("repair of a wrong scalar") {
    const Registry& reg = Registry::standard();
    RepairProblem p{.ring = reg.h(),
                    .target = reg.require_h("x4") * reg.require_h("x8"),
                    .printed = "2*x4*x8",
                    .lookup = reg.h_lookup(),
                    .degree = reg.degree_lookup(),
                    .expected_degree = 6,
                    .vocabulary = generator_names()};
    std::optional<Repair> r = suggest_repair(p);
    REQUIRE(r.has_value());
    CHECK(*evaluate(parse_expr(r->corrected), reg.h(), reg.h_lookup()).value == p.target);
    CHECK_FALSE(r->note.empty());
  }

  TEST_CASE("repair of a missing term") {
    const Registry& reg = Registry::standard();
    RepairProblem p{.ring = reg.h(),
                    .target = reg.require_h("x4").pow(3) + reg.require_h("x4") * reg.require_h("x8"),
                    .printed = "x4^3",
                    .lookup = reg.h_lookup(),
                    .degree = reg.degree_lookup(),
                    .expected_degree = 6,
                    .vocabulary = generator_names()};
    std::optional<Repair> r = suggest_repair(p);
    REQUIRE(r.has_value());
    CHECK(*evaluate(parse_expr(r->corrected), reg.h(), reg.h_lookup()).value == p.target);
  }
}
