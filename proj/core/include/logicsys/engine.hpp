#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "logicsys/rules.hpp"
#include "logicsys/symbol.hpp"

namespace logicsys {

/// Why a symbol entered a deduction.
struct Justification {
  enum class Kind { insertion_premise, insertion_axiom, rule };
  Kind kind = Kind::insertion_premise;
  std::string source;              // relation id or generator name (rule only)
  std::optional<RuleTuple> tuple;  // rule only; conclusion == step symbol
};

struct DeductionStep {
  Symbol symbol;
  Justification why;
};

/// A finite deduction from premises X: distinct step symbols, each justified
/// by insertion (from X or the axioms) or by a rule tuple whose premise set
/// lies among the earlier steps, X, and the axioms.
struct DeductionTrace {
  SymbolSet premises;
  std::vector<DeductionStep> steps;
};

struct ClosureResult {
  SymbolSet closure;
  DeductionTrace trace;
};

inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// Least superset of X and the axioms closed under every relation and
/// generator. The trace lists X in canonical order, then the remaining
/// axioms, then rule steps in deterministic worklist order (arity, then
/// source id, then tuple coordinates; generator tuples interleaved by arity).
/// Throws domain_error if X is not contained in the language and
/// budget_exceeded after `budget` rule firings.
ClosureResult close(const RuleSystem& system, const SymbolSet& x,
                    std::size_t budget = kDefaultBudget);

/// True iff iterating the single named relation or generator on X, and on
/// every subset of X, produces nothing outside the input set together with
/// the system's consequences of the empty set. Checking the subsets keeps
/// triviality downward monotone. Exponential in |X|; X must stay small.
bool applies_trivially(const RuleSystem& system, const std::string& id,
                       const SymbolSet& x);

/// First invariant or justification violation in the trace, or nullopt if the
/// trace is a valid deduction from X in this system.
std::optional<std::string> trace_diagnostic(const DeductionTrace& trace,
                                            const RuleSystem& system,
                                            const SymbolSet& x);

inline bool validate_trace(const DeductionTrace& trace,
                           const RuleSystem& system, const SymbolSet& x) {
  return !trace_diagnostic(trace, system, x).has_value();
}

}  // namespace logicsys
