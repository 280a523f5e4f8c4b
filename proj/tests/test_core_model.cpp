#include <doctest.h>

#include <algorithm>

#include "logicsys/constructions.hpp"
#include "logicsys/rules.hpp"

#include "support/random_systems.hpp"

using namespace logicsys;

namespace {

Symbol tok(const char* s) { return Symbol::token(s); }

RuleSystem tiny_ab_system() {
  RuleSystem system;
  system.language = Language::explicit_set({tok("a"), tok("b")});
  system.axioms = {tok("a")};
  system.relations.push_back(
      Relation{"r2", 2, {RuleTuple({tok("a"), tok("b")})}});
  return system;
}

}  // namespace

TEST_CASE("symbols") {
  CHECK(Symbol::parse("7") == Symbol::natural(7));
  CHECK(Symbol::parse("007").is_natural() == false);  // not canonical decimal
  CHECK(Symbol::parse("x7") == tok("x7"));
  CHECK(Symbol::natural(2) < Symbol::natural(10));
  CHECK(tok("a") < tok("b"));
  CHECK_THROWS_AS(Symbol::token(""), domain_error);
  CHECK_THROWS_AS(Symbol::token("a b"), domain_error);
}

TEST_CASE("validate accepts a well-formed system") {
  CHECK(validate(tiny_ab_system()).empty());
}

TEST_CASE("validate reports arity mismatches") {
  RuleSystem system = tiny_ab_system();
  system.relations.push_back(
      Relation{"r3", 3, {RuleTuple({tok("a"), tok("b")})}});
  auto diags = validate(system);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].find("arity") != std::string::npos);
}

TEST_CASE("validate reports unknown symbols") {
  RuleSystem system = tiny_ab_system();
  system.relations[0].tuples.insert(RuleTuple({tok("a"), tok("z")}));
  auto diags = validate(system);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].find("'z'") != std::string::npos);
}

TEST_CASE("validate is pure") {
  RuleSystem system = tiny_ab_system();
  system.relations[0].tuples.insert(RuleTuple({tok("a"), tok("z")}));
  CHECK(validate(system) == validate(system));
}

TEST_CASE("is_finite_system") {
  CHECK(is_finite_system(tiny_ab_system()));
  CHECK_FALSE(is_finite_system(block_family(0)));
  // Materializing and stripping the generator yields a finite system.
  CHECK(is_finite_system(truncate(block_family(0), 5)));
}

TEST_CASE("generator applicable is monotone in its premise pool") {
  RuleSystem system = block_family(0);
  const auto& family = system.generators[0];
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint64_t> value(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    SymbolSet small, large;
    for (int i = 0; i < 6; ++i) large.insert(Symbol::natural(value(rng)));
    for (const auto& s : large)
      if (rng() % 2) small.insert(s);
    auto from_small = family.applicable(small);
    auto from_large = family.applicable(large);
    for (const auto& t : from_small) {
      CHECK(std::find(from_large.begin(), from_large.end(), t) !=
            from_large.end());
    }
  }
}

TEST_CASE("generator applicable on the empty pool is empty") {
  CHECK(block_family(0).generators[0].applicable({}).empty());
  CHECK(block_family(9).generators[0].applicable({}).empty());
}
