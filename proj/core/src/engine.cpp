#include "logicsys/engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

namespace logicsys {

namespace {

// Worklist order: arity, then source label, then coordinates. Generator
// tuples carry their family name as source, so they interleave with the
// explicit relations by arity.
struct Candidate {
  std::size_t arity;
  std::string source;
  RuleTuple tuple;

  friend auto operator<=>(const Candidate&, const Candidate&) = default;
};

// Semi-naive saturation: tuples wait on their missing premises and become
// ready exactly when the last one is deduced.
class Saturator {
 public:
  Saturator(const RuleSystem& system, const SymbolSet& x, std::size_t budget)
      : system_(system), budget_(budget) {
    trace_.premises = x;
    for (const auto& s : x) {
      if (!system.language.contains(s))
        throw domain_error("unknown symbol '" + s.to_string() +
                           "' not in language");
      add(s, {Justification::Kind::insertion_premise, "", std::nullopt});
    }
    for (const auto& s : system.axioms)
      if (!deduced_.count(s))
        add(s, {Justification::Kind::insertion_axiom, "", std::nullopt});

    // Arity-1 tuples have an empty premise set and fire immediately.
    for (const auto& rel : system.relations)
      for (const auto& t : rel.tuples) register_tuple(rel.id, t);
    refresh_generators();
  }

  ClosureResult run() {
    std::size_t fired = 0;
    while (!ready_.empty()) {
      Candidate cand = *ready_.begin();
      ready_.erase(ready_.begin());
      if (deduced_.count(cand.tuple.conclusion())) continue;
      if (++fired > budget_)
        throw budget_exceeded(
            "closure exceeded firing budget of " + std::to_string(budget_) +
            "; a generator may violate the premise-anchored contract");
      add(cand.tuple.conclusion(),
          {Justification::Kind::rule, cand.source, cand.tuple});
      refresh_generators();
    }
    return {deduced_, std::move(trace_)};
  }

 private:
  void add(const Symbol& s, Justification why) {
    deduced_.insert(s);
    trace_.steps.push_back({s, std::move(why)});
    auto it = waiting_on_.find(s);
    if (it == waiting_on_.end()) return;
    for (std::size_t slot : it->second) {
      Pending& p = pending_[slot];
      if (--p.remaining == 0 && !deduced_.count(p.tuple.conclusion()))
        ready_.insert({p.tuple.arity(), p.source, p.tuple});
    }
    waiting_on_.erase(it);
  }

  void register_tuple(const std::string& source, const RuleTuple& t) {
    if (!registered_.insert({source, t}).second) return;
    SymbolSet prems = t.premises();
    std::vector<Symbol> missing;
    for (const auto& p : prems)
      if (!deduced_.count(p)) missing.push_back(p);
    if (missing.empty()) {
      if (!deduced_.count(t.conclusion()))
        ready_.insert({t.arity(), source, t});
      return;
    }
    pending_.push_back({source, t, missing.size()});
    for (const auto& p : missing)
      waiting_on_[p].push_back(pending_.size() - 1);
  }

  void refresh_generators() {
    for (const auto& g : system_.generators)
      for (const auto& t : g.applicable(deduced_)) register_tuple(g.name, t);
  }

  struct Pending {
    std::string source;
    RuleTuple tuple;
    std::size_t remaining;
  };

  const RuleSystem& system_;
  std::size_t budget_;
  SymbolSet deduced_;
  DeductionTrace trace_;
  std::set<Candidate> ready_;
  std::set<std::pair<std::string, RuleTuple>> registered_;
  std::vector<Pending> pending_;
  std::map<Symbol, std::vector<std::size_t>> waiting_on_;
};

}  // namespace

ClosureResult close(const RuleSystem& system, const SymbolSet& x,
                    std::size_t budget) {
  return Saturator(system, x, budget).run();
}

bool applies_trivially(const RuleSystem& system, const std::string& id,
                       const SymbolSet& x) {
  RuleSystem restricted;
  restricted.language = system.language;
  bool found = false;
  for (const auto& rel : system.relations) {
    if (rel.id == id) {
      restricted.relations.push_back(rel);
      found = true;
    }
  }
  for (const auto& g : system.generators) {
    if (g.name == id) {
      restricted.generators.push_back(g);
      found = true;
    }
  }
  if (!found) throw domain_error("unknown relation or generator '" + id + "'");

  const SymbolSet base = close(system, {}).closure;  // C(empty)
  auto trivial_on = [&](const SymbolSet& y) {
    return is_subset(close(restricted, y).closure, set_union(y, base));
  };
  if (!trivial_on(x)) return false;
  // Triviality is hereditary: a symbol of X may mask a conclusion that a
  // smaller premise pool would expose, so every subset is checked.
  std::vector<Symbol> elems(x.begin(), x.end());
  if (elems.size() > 24)
    throw domain_error("premise set too large for triviality check");
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << elems.size());
       ++mask) {
    SymbolSet y;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (mask & (std::size_t{1} << i)) y.insert(elems[i]);
    if (!trivial_on(y)) return false;
  }
  return true;
}

std::optional<std::string> trace_diagnostic(const DeductionTrace& trace,
                                            const RuleSystem& system,
                                            const SymbolSet& x) {
  SymbolSet available = set_union(x, system.axioms);
  SymbolSet step_symbols;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    const std::string at = "step " + std::to_string(i + 1) + " (" +
                           step.symbol.to_string() + "): ";
    if (!step_symbols.insert(step.symbol).second)
      return at + "duplicate step symbol";

    switch (step.why.kind) {
      case Justification::Kind::insertion_premise:
        if (!x.count(step.symbol)) return at + "symbol not in the premise set";
        break;
      case Justification::Kind::insertion_axiom:
        if (!system.axioms.count(step.symbol))
          return at + "symbol not in the axioms";
        break;
      case Justification::Kind::rule: {
        if (!step.why.tuple) return at + "rule justification has no tuple";
        const RuleTuple& t = *step.why.tuple;
        if (t.conclusion() != step.symbol)
          return at + "tuple conclusion does not match step symbol";
        if (!is_subset(t.premises(), available))
          return at + "tuple premise set not among prior symbols, X, axioms";
        bool in_system = false;
        for (const auto& rel : system.relations)
          if (rel.id == step.why.source && rel.tuples.count(t)) in_system = true;
        for (const auto& g : system.generators) {
          if (g.name != step.why.source) continue;
          // Premise-anchored: a genuine tuple is returned for its own premises.
          auto got = g.applicable(t.premises());
          if (std::find(got.begin(), got.end(), t) != got.end())
            in_system = true;
        }
        if (!in_system)
          return at + "tuple not found in cited relation or generator '" +
                 step.why.source + "'";
        break;
      }
    }
    available.insert(step.symbol);
  }
  return std::nullopt;
}

}  // namespace logicsys
