#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "logicsys/constructions.hpp"
#include "logicsys/engine.hpp"

#include "support/naive_oracle.hpp"
#include "support/random_systems.hpp"

using namespace logicsys;
using logicsys::testing::naive_closure;
using logicsys::testing::random_subset;
using logicsys::testing::random_system;

namespace {

Symbol nat(std::uint64_t v) { return Symbol::natural(v); }

SymbolSet nats(std::initializer_list<std::uint64_t> values) {
  SymbolSet out;
  for (auto v : values) out.insert(nat(v));
  return out;
}

std::string format_trace(const DeductionTrace& trace) {
  std::ostringstream out;
  for (const auto& step : trace.steps) {
    out << step.symbol.to_string() << '|' << static_cast<int>(step.why.kind)
        << '|' << step.why.source << '|'
        << (step.why.tuple ? step.why.tuple->to_string() : "-") << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("block family closures match the worked values") {
  RuleSystem family = block_family(0);
  CHECK(close(family, nats({0})).closure == nats({0, 1}));
  CHECK(close(family, {}).closure == SymbolSet{});
  CHECK(close(family, nats({5, 6, 7})).closure == nats({5, 6, 7, 8}));
  // Cross-check the last one against the independent oracle.
  CHECK(naive_closure(family, nats({5, 6, 7})) == nats({5, 6, 7, 8}));
}

TEST_CASE("closure contains the input and the axioms") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    RuleSystem system = random_system(rng, 6);
    SymbolSet x = random_subset(rng, system.language);
    SymbolSet closed = close(system, x).closure;
    CHECK(is_subset(x, closed));
    CHECK(is_subset(system.axioms, closed));
  }
}

TEST_CASE("closure is extensive, idempotent, monotone") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    RuleSystem system = random_system(rng, 6);
    SymbolSet x = random_subset(rng, system.language);
    SymbolSet cx = close(system, x).closure;
    CHECK(is_subset(x, cx));
    CHECK(close(system, cx).closure == cx);

    SymbolSet y = cx;  // x subset of y by extensiveness
    for (const auto& s : system.language.symbols())
      if (rng() % 2) y.insert(s);
    CHECK(is_subset(cx, close(system, y).closure));
  }
}

TEST_CASE("closure is finitary: union over all subsets of X") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    RuleSystem system = random_system(rng, 5);
    SymbolSet x = random_subset(rng, system.language, 0.7);
    SymbolSet cx = close(system, x).closure;

    std::vector<Symbol> elems(x.begin(), x.end());
    SymbolSet unioned;
    for (std::size_t mask = 0; mask < (std::size_t{1} << elems.size()); ++mask) {
      SymbolSet a;
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (mask & (std::size_t{1} << i)) a.insert(elems[i]);
      SymbolSet ca = close(system, a).closure;
      unioned.insert(ca.begin(), ca.end());
    }
    CHECK(unioned == cx);
  }
}

TEST_CASE("closure of the empty set is axioms plus premise-free conclusions") {
  RuleSystem system;
  system.language = Language::naturals();
  system.axioms = nats({1});
  system.relations.push_back(Relation{"u", 1, {RuleTuple({nat(9)})}});
  system.relations.push_back(Relation{"r2", 2, {RuleTuple({nat(2), nat(3)})}});
  CHECK(close(system, {}).closure == nats({1, 9}));
}

TEST_CASE("input outside the language is an error") {
  RuleSystem family = block_family(0);
  CHECK_THROWS_AS(close(family, {Symbol::token("x")}), domain_error);
}

TEST_CASE("a contract-violating generator hits the budget") {
  RuleSystem system;
  system.language = Language::naturals();
  GeneratorFamily bad;
  bad.name = "divergent";
  bad.applicable = [](const SymbolSet& d) {
    // Keeps inventing a fresh premise-free conclusion; never saturates.
    std::uint64_t next = d.empty() ? 0 : std::prev(d.end())->value() + 1;
    return std::vector<RuleTuple>{RuleTuple({Symbol::natural(next)})};
  };
  system.generators.push_back(std::move(bad));
  CHECK_THROWS_AS(close(system, nats({0}), 500), budget_exceeded);
}

TEST_CASE("semi-naive closure equals the naive oracle") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    RuleSystem system = random_system(rng, 8);
    SymbolSet x = random_subset(rng, system.language);
    CHECK(close(system, x).closure == naive_closure(system, x));
  }
}

TEST_CASE("closures are deterministic, trace and all") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    RuleSystem system = random_system(rng, 6);
    SymbolSet x = random_subset(rng, system.language);
    ClosureResult first = close(system, x);
    ClosureResult second = close(system, x);
    CHECK(first.closure == second.closure);
    CHECK(format_trace(first.trace) == format_trace(second.trace));
  }
}

TEST_CASE("applies_trivially on the block family") {
  // Materialized so the arity-4 relation has an id to point at.
  RuleSystem system = truncate(block_family(0), 4);
  CHECK(applies_trivially(system, "herrmann#4", nats({5, 6})));
  CHECK_FALSE(applies_trivially(system, "herrmann#4", nats({5, 6, 7})));
  CHECK_THROWS_AS(applies_trivially(system, "nope", nats({5})), domain_error);
}

TEST_CASE("axiom content applies trivially to any X") {
  RuleSystem system;
  system.language = Language::naturals();
  system.axioms = nats({3, 4});
  system.relations.push_back(Relation{"u", 1, {RuleTuple({nat(3)})}});
  CHECK(applies_trivially(system, "u", nats({0, 1})));
  CHECK(applies_trivially(system, "u", {}));
}

TEST_CASE("triviality is downward monotone") {
  std::mt19937 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    RuleSystem system = random_system(rng, 6);
    if (system.relations.empty()) continue;
    const auto& rel =
        system.relations[rng() % system.relations.size()];
    SymbolSet x = random_subset(rng, system.language);
    if (!applies_trivially(system, rel.id, x)) continue;
    ++checked;
    std::vector<Symbol> elems(x.begin(), x.end());
    for (std::size_t mask = 0; mask < (std::size_t{1} << elems.size()); ++mask) {
      SymbolSet y;
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (mask & (std::size_t{1} << i)) y.insert(elems[i]);
      CHECK(applies_trivially(system, rel.id, y));
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("engine traces validate") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    RuleSystem system = random_system(rng, 6);
    SymbolSet x = random_subset(rng, system.language);
    ClosureResult result = close(system, x);
    auto diag = trace_diagnostic(result.trace, system, x);
    if (diag) FAIL(*diag);
  }
  RuleSystem family = block_family(0);
  ClosureResult result = close(family, nats({5, 6, 7}));
  CHECK(validate_trace(result.trace, family, nats({5, 6, 7})));
}

TEST_CASE("bad traces are rejected") {
  RuleSystem family = block_family(0);
  SymbolSet x = nats({5, 6, 7});
  ClosureResult good = close(family, x);

  SUBCASE("premise set not among prior symbols") {
    // a -> b -> c; c's rule step cites the derived b, so reordering breaks it.
    RuleSystem chain;
    Symbol a = Symbol::token("a"), b = Symbol::token("b"), c = Symbol::token("c");
    chain.language = Language::explicit_set({a, b, c});
    chain.relations.push_back(
        Relation{"r2", 2, {RuleTuple({a, b}), RuleTuple({b, c})}});
    ClosureResult result = close(chain, {a});
    REQUIRE(validate_trace(result.trace, chain, {a}));
    DeductionTrace bad = result.trace;
    std::swap(bad.steps[1], bad.steps[2]);
    CHECK_FALSE(validate_trace(bad, chain, {a}));
  }
  SUBCASE("duplicated step symbol") {
    DeductionTrace bad = good.trace;
    bad.steps.push_back(bad.steps.front());
    CHECK_FALSE(validate_trace(bad, family, x));
  }
  SUBCASE("conclusion mismatch") {
    DeductionTrace bad = good.trace;
    bad.steps.back().symbol = nat(99);
    CHECK_FALSE(validate_trace(bad, family, x));
  }
  SUBCASE("tuple not in the cited source") {
    DeductionTrace bad = good.trace;
    bad.steps.back().why.tuple = RuleTuple({nat(5), nat(6), nat(7), nat(99)});
    bad.steps.back().symbol = nat(99);
    CHECK_FALSE(validate_trace(bad, family, x));
  }
}
