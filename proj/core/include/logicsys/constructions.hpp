#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logicsys/rules.hpp"
#include "logicsys/symbol.hpp"
#include "logicsys/table.hpp"

namespace logicsys {

/// The i-th coordinates of block n (n >= 2) at offset m are
/// m + (n^2 - n - 4)/2 + i for 1 <= i <= n; consecutive blocks tile the
/// naturals above m.
std::vector<Symbol> block_tuple(std::uint64_t offset, std::size_t n);

/// Generator-backed rule system over the naturals: no axioms, one singleton
/// n-ary relation per n >= 2 holding block_tuple(offset, n). offset = 0 is
/// the inexpressible family; distinct offsets give distinct operators.
RuleSystem block_family(std::uint64_t offset);

/// Finite logic-system holding exactly the materialized tuples of arity
/// <= max_arity. Requires every generator to support materialization.
RuleSystem truncate(const RuleSystem& system, std::size_t max_arity);

/// Witness that no system of maximum arity p reproduces the block-family
/// operator: with k = p + 1 and X the first k-1 symbols of block k, the full
/// family closes X to the whole block while the arity-<=p truncation fixes X,
/// and every (k-2)-subset of X is already closed.
struct Thm22Report {
  std::size_t max_arity = 0;  // p
  std::size_t block = 0;      // k = p + 1
  SymbolSet x;
  SymbolSet closure_full;
  SymbolSet closure_truncated;
  bool small_subsets_fixed = false;
  bool disagreement = false;
};
Thm22Report thm22_experiment(std::size_t max_arity);
std::string to_text(const Thm22Report& report);

struct DistinctnessWitness {
  std::uint64_t offset_a = 0;
  std::uint64_t offset_b = 0;
  SymbolSet witness;
  SymbolSet closure_a;
  SymbolSet closure_b;
};

struct DistinctnessReport {
  std::vector<std::uint64_t> offsets;
  std::vector<DistinctnessWitness> witnesses;  // one per unordered pair
  bool all_witnessed = false;
};
DistinctnessReport distinctness_experiment(
    const std::vector<std::uint64_t>& offsets);
std::string to_text(const DistinctnessReport& report);

/// The rule system whose closure reproduces a given operator: axioms are the
/// image of the empty set, and each subset X with image(X) != X + axioms
/// contributes tuples (x1,...,xn,y) over its sorted elements, one per missing
/// consequence y. Tuples of equal arity are unioned into one relation.
RuleSystem ri_star(const OperatorTable& t);

/// True iff re-tabulating ri_star(t) over t's language reproduces t exactly.
bool roundtrip_check(const OperatorTable& t);

/// A recorded derivation: conclusions B deduced from hypotheses H using
/// auxiliary axioms A', with B disjoint from H and A'.
struct Derivation {
  SymbolSet hypotheses;
  SymbolSet axioms_used;
  SymbolSet conclusions;
};

enum class DerivationEncoding { wide, chained };

/// Compiles a derivation into rules. wide: one (|H|+|A'|+1)-ary relation with
/// a tuple per conclusion. chained: a singleton relation concluding the least
/// conclusion, plus a binary relation fanning out to the rest.
std::vector<Relation> rules_from_derivation(const Derivation& d,
                                            DerivationEncoding encoding);

/// Compares the operator generated by the union of several rule systems with
/// the lattice join of their individual operators (each re-tabulated over the
/// union language). The verdict is reported, not asserted.
struct JoinReport {
  Language language = Language::naturals();
  bool union_axiom_i = false;
  bool union_axiom_ii = false;
  bool union_axiom_iii = false;
  std::vector<bool> upper_bound;  // leq(table_i, C_union) per input
  bool equal = false;
  std::optional<SymbolSet> first_difference;
  SymbolSet union_image_at_difference;
  SymbolSet join_image_at_difference;
};
JoinReport join_experiment(const std::vector<RuleSystem>& systems);
std::string to_text(const JoinReport& report);

}  // namespace logicsys
