#include <doctest.h>

#include <sstream>

#include "logicsys/constructions.hpp"
#include "logicsys/engine.hpp"
#include "logicsys/rules_io.hpp"

#include "support/random_systems.hpp"

using namespace logicsys;
using logicsys::testing::random_system;

namespace {

RuleSystem parse(const std::string& text) {
  std::istringstream in(text);
  return parse_rules(in);
}

}  // namespace

TEST_CASE("rules file parsing") {
  RuleSystem system = parse(
      "# a comment\n"
      "axiom a\n"
      "\n"
      "rule a -> b c  # expands to two tuples\n"
      "rule a b -> c\n");
  CHECK(system.axioms == SymbolSet{Symbol::token("a")});
  REQUIRE(system.relations.size() == 2);
  CHECK(system.relations[0].arity == 2);
  CHECK(system.relations[0].tuples.size() == 2);
  CHECK(system.relations[1].arity == 3);
  CHECK_FALSE(system.language.is_naturals());
  CHECK(system.language.size() == 3);
  CHECK(validate(system).empty());
}

TEST_CASE("family lines build generator-backed naturals systems") {
  RuleSystem system = parse("family herrmann offset=2\n");
  CHECK(system.language.is_naturals());
  REQUIRE(system.generators.size() == 1);
  CHECK(close(system, {Symbol::natural(2)}).closure ==
        SymbolSet{Symbol::natural(2), Symbol::natural(3)});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("frobnicate a b\n"), parse_error);
  CHECK_THROWS_AS(parse("rule a b c\n"), parse_error);
  CHECK_THROWS_AS(parse("rule -> a\n"), parse_error);
  CHECK_THROWS_AS(parse("rule a ->\n"), parse_error);
  CHECK_THROWS_AS(parse("family unknown offset=0\n"), parse_error);
  CHECK_THROWS_AS(parse("family herrmann offset=x\n"), parse_error);
  // Token and natural symbols never mix in one file.
  CHECK_THROWS_AS(parse("rule a -> 1\n"), parse_error);
  CHECK_THROWS_AS(parse("axiom a\nfamily herrmann offset=0\n"), parse_error);
}

TEST_CASE("emit-parse round trip is the identity on canonical files") {
  const std::string canonical =
      "axiom a\n"
      "rule a -> b\n"
      "rule a b -> c\n";
  CHECK(emit_rules(parse(canonical)) == canonical);

  const std::string with_family = "family herrmann offset=4\n";
  CHECK(emit_rules(parse(with_family)) == with_family);
}

TEST_CASE("emit-parse round trip on random systems") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    RuleSystem system = random_system(rng, 6);
    if (system.axioms.empty() && system.relations.empty()) continue;
    std::string once = emit_rules(system);
    std::string twice = emit_rules(parse(once));
    CHECK(once == twice);
  }
}

TEST_CASE("set literals") {
  CHECK(parse_set_literal("{}") == SymbolSet{});
  CHECK(parse_set_literal("0,1,5") ==
        SymbolSet{Symbol::natural(0), Symbol::natural(1), Symbol::natural(5)});
  CHECK(parse_set_literal("{a, b}") ==
        SymbolSet{Symbol::token("a"), Symbol::token("b")});
  CHECK_THROWS_AS(parse_set_literal("0,0"), parse_error);
  CHECK_THROWS_AS(parse_set_literal(""), parse_error);
  CHECK_THROWS_AS(parse_set_literal("a,,b"), parse_error);
}
