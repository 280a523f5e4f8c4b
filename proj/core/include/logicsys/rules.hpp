#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "logicsys/symbol.hpp"

namespace logicsys {

/// An n-tuple (a1,...,an), n >= 1. Coordinates a1..a(n-1) are the premises,
/// matched as a set; an is the conclusion. A 1-tuple is an axiom.
class RuleTuple {
 public:
  explicit RuleTuple(std::vector<Symbol> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw domain_error("rule tuple must have arity >= 1");
  }

  std::size_t arity() const { return coords_.size(); }
  const std::vector<Symbol>& coords() const { return coords_; }
  const Symbol& conclusion() const { return coords_.back(); }

  /// Premise coordinates read as a set; duplicates collapse.
  SymbolSet premises() const {
    return SymbolSet(coords_.begin(), coords_.end() - 1);
  }

  std::string to_string() const;

  friend bool operator==(const RuleTuple& a, const RuleTuple& b) = default;
  friend auto operator<=>(const RuleTuple& a, const RuleTuple& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Symbol> coords_;
};

/// A named n-ary relation: a finite set of tuples of one declared arity.
struct Relation {
  std::string id;
  std::size_t arity = 0;
  std::set<RuleTuple> tuples;
};

/// Intensional rule family. `applicable(D)` must return exactly the tuples
/// whose entire premise set is contained in D, finitely many, deterministic
/// (the premise-anchored contract). `materialize`, when provided, enumerates
/// every tuple of arity <= its argument; families with infinitely many tuples
/// per arity leave it unset.
struct GeneratorFamily {
  std::string name;
  std::map<std::string, std::int64_t> params;
  std::function<std::vector<RuleTuple>(const SymbolSet&)> applicable;
  std::function<std::vector<RuleTuple>(std::size_t)> materialize;
};

/// A logic-system: a language, the merged unary relation (axioms), explicitly
/// listed relations, and intensional generator families.
struct RuleSystem {
  Language language = Language::naturals();
  SymbolSet axioms;
  std::vector<Relation> relations;
  std::vector<GeneratorFamily> generators;
};

/// All invariant violations, as human-readable diagnostics. Empty = valid.
std::vector<std::string> validate(const RuleSystem& system);

/// True iff the system has no generator families, i.e. it lists finitely many
/// relations explicitly.
bool is_finite_system(const RuleSystem& system);

}  // namespace logicsys
