#include "logicsys/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "logicsys/engine.hpp"

namespace logicsys {

std::vector<Symbol> block_tuple(std::uint64_t offset, std::size_t n) {
  if (n < 2) throw domain_error("blocks exist only for arity >= 2");
  // (n^2 - n - 4)/2 written as (n^2 - n)/2 - 2 to stay in integers; the
  // first coordinate is offset + (n^2 - n)/2 - 1 >= offset for n >= 2.
  const std::int64_t base =
      static_cast<std::int64_t>(offset) +
      static_cast<std::int64_t>(n * (n - 1) / 2) - 2;
  std::vector<Symbol> coords;
  coords.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    coords.push_back(Symbol::natural(static_cast<std::uint64_t>(
        base + static_cast<std::int64_t>(i))));
  return coords;
}

RuleSystem block_family(std::uint64_t offset) {
  GeneratorFamily family;
  family.name = "herrmann";
  family.params["offset"] = static_cast<std::int64_t>(offset);
  family.applicable = [offset](const SymbolSet& d) {
    std::vector<RuleTuple> out;
    if (d.empty()) return out;
    const std::uint64_t max = std::prev(d.end())->value();
    for (std::size_t n = 2;; ++n) {
      std::vector<Symbol> coords = block_tuple(offset, n);
      if (coords.front().value() > max) break;  // premise min already beyond D
      bool anchored = true;
      for (std::size_t i = 0; i + 1 < coords.size(); ++i)
        if (!d.count(coords[i])) {
          anchored = false;
          break;
        }
      if (anchored) out.emplace_back(std::move(coords));
    }
    return out;
  };
  family.materialize = [offset](std::size_t max_arity) {
    std::vector<RuleTuple> out;
    for (std::size_t n = 2; n <= max_arity; ++n)
      out.emplace_back(block_tuple(offset, n));
    return out;
  };

  RuleSystem system;
  system.language = Language::naturals();
  system.generators.push_back(std::move(family));
  return system;
}

RuleSystem truncate(const RuleSystem& system, std::size_t max_arity) {
  if (max_arity < 1) throw domain_error("max arity must be >= 1");
  RuleSystem out;
  out.language = system.language;
  out.axioms = system.axioms;
  for (const auto& rel : system.relations)
    if (rel.arity <= max_arity) out.relations.push_back(rel);
  for (const auto& g : system.generators) {
    if (!g.materialize)
      throw domain_error("generator '" + g.name +
                         "' cannot be materialized for truncation");
    std::map<std::size_t, Relation> by_arity;
    for (const auto& t : g.materialize(max_arity)) {
      if (t.arity() > max_arity) continue;
      Relation& rel = by_arity[t.arity()];
      if (rel.tuples.empty()) {
        rel.id = g.name + "#" + std::to_string(t.arity());
        rel.arity = t.arity();
      }
      rel.tuples.insert(t);
    }
    for (auto& [arity, rel] : by_arity) out.relations.push_back(std::move(rel));
  }
  return out;
}

Thm22Report thm22_experiment(std::size_t max_arity) {
  if (max_arity < 2) throw domain_error("max arity must be >= 2");
  Thm22Report report;
  report.max_arity = max_arity;
  report.block = max_arity + 1;

  const std::size_t k = report.block;
  std::vector<Symbol> block = block_tuple(0, k);
  report.x = SymbolSet(block.begin(), block.end() - 1);

  RuleSystem family = block_family(0);
  RuleSystem truncated = truncate(family, max_arity);
  report.closure_full = close(family, report.x).closure;
  report.closure_truncated = close(truncated, report.x).closure;
  report.disagreement = report.closure_full != report.closure_truncated;

  // Every (k-2)-subset of X, i.e. X minus one element, must already be closed.
  report.small_subsets_fixed = true;
  for (const auto& omitted : report.x) {
    SymbolSet y = report.x;
    y.erase(omitted);
    if (close(family, y).closure != y) {
      report.small_subsets_fixed = false;
      break;
    }
  }
  return report;
}

std::string to_text(const Thm22Report& report) {
  std::ostringstream out;
  out << "max-arity: " << report.max_arity << '\n'
      << "k: " << report.block << '\n'
      << "X: " << to_string(report.x) << '\n'
      << "closure: " << to_string(report.closure_full) << '\n'
      << "closure-truncated: " << to_string(report.closure_truncated) << '\n'
      << "small-subsets-fixed: " << (report.small_subsets_fixed ? "true" : "false")
      << '\n'
      << "disagreement: " << (report.disagreement ? "true" : "false") << '\n';
  return out.str();
}

DistinctnessReport distinctness_experiment(
    const std::vector<std::uint64_t>& offsets) {
  std::vector<std::uint64_t> sorted = offsets;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 2)
    throw domain_error("distinctness experiment needs at least two offsets");

  DistinctnessReport report;
  report.offsets = sorted;
  report.all_witnessed = true;

  auto differs = [](const RuleSystem& fa, const RuleSystem& fb,
                    const SymbolSet& w, DistinctnessWitness& wit) {
    wit.witness = w;
    wit.closure_a = close(fa, w).closure;
    wit.closure_b = close(fb, w).closure;
    return wit.closure_a != wit.closure_b;
  };

  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      RuleSystem fa = block_family(sorted[i]);
      RuleSystem fb = block_family(sorted[j]);
      DistinctnessWitness wit;
      wit.offset_a = sorted[i];
      wit.offset_b = sorted[j];

      // The analytic witness {m} works; singleton/pair search is a fallback.
      bool found = differs(fa, fb, {Symbol::natural(sorted[i])}, wit);
      const std::uint64_t bound = sorted[j] + 8;
      for (std::uint64_t v = 0; !found && v <= bound; ++v)
        found = differs(fa, fb, {Symbol::natural(v)}, wit);
      for (std::uint64_t v = 0; !found && v <= bound; ++v)
        for (std::uint64_t w = v + 1; !found && w <= bound; ++w)
          found = differs(fa, fb, {Symbol::natural(v), Symbol::natural(w)}, wit);

      if (!found) report.all_witnessed = false;
      report.witnesses.push_back(std::move(wit));
    }
  }
  return report;
}

std::string to_text(const DistinctnessReport& report) {
  std::ostringstream out;
  out << "offsets:";
  for (auto m : report.offsets) out << ' ' << m;
  out << '\n'
      << "pairs: " << report.witnesses.size() << '\n';
  for (const auto& wit : report.witnesses) {
    out << "m=" << wit.offset_a << " m'=" << wit.offset_b
        << " W=" << to_string(wit.witness)
        << " C_m(W)=" << to_string(wit.closure_a)
        << " C_m'(W)=" << to_string(wit.closure_b) << '\n';
  }
  out << "all-witnessed: " << (report.all_witnessed ? "true" : "false") << '\n';
  return out.str();
}

RuleSystem ri_star(const OperatorTable& t) {
  if (!check_axiom_i(t) || !check_axiom_ii(t) || !check_axiom_iii(t))
    throw domain_error("ri_star input is not a finite consequence operator");

  RuleSystem out;
  out.language = t.language();
  const std::uint32_t axiom_mask = t.image(0);
  out.axioms = t.set_of(axiom_mask);

  std::map<std::size_t, Relation> by_arity;
  for (std::uint32_t subset = 1; subset < t.subset_count(); ++subset) {
    const std::uint32_t missing = t.image(subset) & ~(subset | axiom_mask);
    if (!missing) continue;
    SymbolSet x = t.set_of(subset);
    std::vector<Symbol> coords(x.begin(), x.end());
    coords.push_back(coords.front());  // placeholder for the conclusion
    const std::size_t arity = coords.size();
    Relation& rel = by_arity[arity];
    if (rel.tuples.empty()) {
      rel.id = "R" + std::to_string(arity);
      rel.arity = arity;
    }
    for (const auto& y : t.set_of(missing)) {
      coords.back() = y;
      rel.tuples.insert(RuleTuple(coords));
    }
  }
  for (auto& [arity, rel] : by_arity) out.relations.push_back(std::move(rel));
  return out;
}

bool roundtrip_check(const OperatorTable& t) {
  return table_from_system(ri_star(t), t.language()) == t;
}

std::vector<Relation> rules_from_derivation(const Derivation& d,
                                            DerivationEncoding encoding) {
  if (d.hypotheses.empty()) throw domain_error("derivation needs hypotheses");
  if (d.conclusions.empty()) throw domain_error("derivation needs conclusions");
  for (const auto& b : d.conclusions)
    if (d.hypotheses.count(b) || d.axioms_used.count(b))
      throw domain_error("conclusion '" + b.to_string() +
                         "' overlaps the hypotheses or axioms");

  std::vector<Symbol> stem(d.hypotheses.begin(), d.hypotheses.end());
  stem.insert(stem.end(), d.axioms_used.begin(), d.axioms_used.end());
  const std::size_t arity = stem.size() + 1;

  std::vector<Relation> out;
  if (encoding == DerivationEncoding::wide) {
    Relation rel{"derived", arity, {}};
    for (const auto& b : d.conclusions) {
      std::vector<Symbol> coords = stem;
      coords.push_back(b);
      rel.tuples.insert(RuleTuple(std::move(coords)));
    }
    out.push_back(std::move(rel));
    return out;
  }

  const Symbol pivot = *d.conclusions.begin();
  Relation head{"derived", arity, {}};
  std::vector<Symbol> coords = stem;
  coords.push_back(pivot);
  head.tuples.insert(RuleTuple(std::move(coords)));
  out.push_back(std::move(head));

  Relation fanout{"fanout", 2, {}};
  for (const auto& b : d.conclusions)
    if (b != pivot) fanout.tuples.insert(RuleTuple({pivot, b}));
  if (!fanout.tuples.empty()) out.push_back(std::move(fanout));
  return out;
}

JoinReport join_experiment(const std::vector<RuleSystem>& systems) {
  if (systems.size() < 2 || systems.size() > 4)
    throw domain_error("join experiment takes 2 to 4 systems");

  SymbolSet all_symbols;
  for (const auto& s : systems) {
    if (s.language.is_naturals())
      throw domain_error("join experiment requires explicit languages");
    all_symbols.insert(s.language.symbols().begin(),
                       s.language.symbols().end());
  }
  if (all_symbols.size() > 10)
    throw domain_error("combined language too large (max 10 symbols)");
  Language language = Language::explicit_set(all_symbols);

  RuleSystem unioned;
  unioned.language = language;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const std::string prefix = "s" + std::to_string(i) + ":";
    unioned.axioms.insert(systems[i].axioms.begin(), systems[i].axioms.end());
    for (auto rel : systems[i].relations) {
      rel.id = prefix + rel.id;
      unioned.relations.push_back(std::move(rel));
    }
    for (auto g : systems[i].generators) {
      g.name = prefix + g.name;
      unioned.generators.push_back(std::move(g));
    }
  }

  JoinReport report;
  report.language = language;
  OperatorTable c_union = table_from_system(unioned, language);
  report.union_axiom_i = check_axiom_i(c_union);
  report.union_axiom_ii = check_axiom_ii(c_union);
  report.union_axiom_iii = check_axiom_iii(c_union);

  // Extension convention: re-tabulate each input system over the union
  // language, rules unchanged.
  std::vector<OperatorTable> tables;
  for (const auto& s : systems) {
    RuleSystem widened = s;
    widened.language = language;
    tables.push_back(table_from_system(widened, language));
  }
  for (const auto& t : tables) report.upper_bound.push_back(leq(t, c_union));

  OperatorTable lattice_join = tables[0];
  for (std::size_t i = 1; i < tables.size(); ++i)
    lattice_join = join(lattice_join, tables[i]);

  report.equal = c_union == lattice_join;
  if (!report.equal) {
    for (std::uint32_t subset = 0; subset < c_union.subset_count(); ++subset) {
      if (c_union.image(subset) != lattice_join.image(subset)) {
        report.first_difference = c_union.set_of(subset);
        report.union_image_at_difference = c_union.set_of(c_union.image(subset));
        report.join_image_at_difference =
            lattice_join.set_of(lattice_join.image(subset));
        break;
      }
    }
  }
  return report;
}

std::string to_text(const JoinReport& report) {
  std::ostringstream out;
  auto verdict = [](bool b) { return b ? "pass" : "fail"; };
  out << "systems: " << report.upper_bound.size() << '\n'
      << "language: " << to_string(SymbolSet(report.language.symbols())) << '\n'
      << "union-axiom-i: " << verdict(report.union_axiom_i) << '\n'
      << "union-axiom-ii: " << verdict(report.union_axiom_ii) << '\n'
      << "union-axiom-iii: " << verdict(report.union_axiom_iii) << '\n';
  for (std::size_t i = 0; i < report.upper_bound.size(); ++i)
    out << "upper-bound-" << (i + 1) << ": "
        << (report.upper_bound[i] ? "true" : "false") << '\n';
  out << "equal: " << (report.equal ? "true" : "false") << '\n';
  if (report.first_difference) {
    out << "first-difference: " << to_string(*report.first_difference) << '\n'
        << "union-image: " << to_string(report.union_image_at_difference) << '\n'
        << "join-image: " << to_string(report.join_image_at_difference) << '\n';
  }
  return out.str();
}

}  // namespace logicsys
