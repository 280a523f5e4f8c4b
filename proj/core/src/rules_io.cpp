#include "logicsys/rules_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "logicsys/constructions.hpp"

namespace logicsys {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream in(line);
  std::string word;
  while (in >> word) {
    if (word.starts_with('#')) break;
    words.push_back(word);
  }
  return words;
}

}  // namespace

RuleSystem parse_rules(std::istream& in) {
  SymbolSet axioms;
  std::map<std::size_t, std::set<RuleTuple>> tuples_by_arity;
  std::vector<GeneratorFamily> generators;
  bool saw_token = false;
  bool saw_natural = false;

  auto note = [&](const Symbol& s) {
    (s.is_natural() ? saw_natural : saw_token) = true;
  };

  SymbolSet mentioned;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto words = split_words(line);
    if (words.empty()) continue;
    const std::string at = "line " + std::to_string(lineno) + ": ";

    if (words[0] == "axiom") {
      if (words.size() < 2) throw parse_error(at + "axiom line needs symbols");
      for (std::size_t i = 1; i < words.size(); ++i) {
        Symbol s = Symbol::parse(words[i]);
        note(s);
        mentioned.insert(s);
        axioms.insert(s);
      }
    } else if (words[0] == "rule") {
      auto arrow = std::find(words.begin(), words.end(), "->");
      if (arrow == words.end())
        throw parse_error(at + "rule line needs '->'");
      std::vector<Symbol> premises;
      for (auto it = words.begin() + 1; it != arrow; ++it) {
        Symbol s = Symbol::parse(*it);
        note(s);
        mentioned.insert(s);
        premises.push_back(s);
      }
      if (premises.empty())
        throw parse_error(at + "rule line needs at least one premise");
      if (arrow + 1 == words.end())
        throw parse_error(at + "rule line needs at least one conclusion");
      for (auto it = arrow + 1; it != words.end(); ++it) {
        Symbol c = Symbol::parse(*it);
        note(c);
        mentioned.insert(c);
        std::vector<Symbol> coords = premises;
        coords.push_back(c);
        tuples_by_arity[coords.size()].insert(RuleTuple(std::move(coords)));
      }
    } else if (words[0] == "family") {
      if (words.size() != 3)
        throw parse_error(at + "family line is 'family <name> offset=<m>'");
      const std::string& name = words[1];
      if (!words[2].starts_with("offset="))
        throw parse_error(at + "family line is 'family <name> offset=<m>'");
      Symbol offset = Symbol::parse(words[2].substr(7));
      if (!offset.is_natural())
        throw parse_error(at + "family offset must be a natural number");
      if (name != "herrmann")
        throw parse_error(at + "unknown family '" + name + "'");
      generators.push_back(block_family(offset.value()).generators[0]);
    } else {
      throw parse_error(at + "unknown directive '" + words[0] + "'");
    }
  }

  if (saw_token && saw_natural)
    throw parse_error("token and natural-number symbols mixed in one file");
  if (saw_token && !generators.empty())
    throw parse_error("generator families require a natural-number file");

  RuleSystem system;
  system.language = saw_token ? Language::explicit_set(mentioned)
                              : Language::naturals();
  system.axioms = std::move(axioms);
  for (auto& [arity, tuples] : tuples_by_arity)
    system.relations.push_back(
        Relation{"r" + std::to_string(arity), arity, std::move(tuples)});
  system.generators = std::move(generators);

  auto diags = validate(system);
  if (!diags.empty()) throw parse_error("invalid system: " + diags.front());
  return system;
}

RuleSystem parse_rules_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open rules file '" + path + "'");
  return parse_rules(in);
}

std::string emit_rules(const RuleSystem& system) {
  std::ostringstream out;
  if (!system.axioms.empty()) {
    out << "axiom";
    for (const auto& s : system.axioms) out << ' ' << s.to_string();
    out << '\n';
  }

  std::set<RuleTuple> tuples;
  for (const auto& rel : system.relations)
    tuples.insert(rel.tuples.begin(), rel.tuples.end());
  std::vector<RuleTuple> sorted(tuples.begin(), tuples.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const RuleTuple& a, const RuleTuple& b) {
                     return a.arity() < b.arity();
                   });
  for (const auto& t : sorted) {
    out << "rule";
    for (std::size_t i = 0; i + 1 < t.coords().size(); ++i)
      out << ' ' << t.coords()[i].to_string();
    out << " -> " << t.conclusion().to_string() << '\n';
  }

  std::vector<const GeneratorFamily*> families;
  for (const auto& g : system.generators) families.push_back(&g);
  std::sort(families.begin(), families.end(),
            [](const GeneratorFamily* a, const GeneratorFamily* b) {
              return std::tie(a->name, a->params) < std::tie(b->name, b->params);
            });
  for (const auto* g : families) {
    auto offset = g->params.find("offset");
    if (g->name != "herrmann" || offset == g->params.end())
      throw domain_error("generator '" + g->name +
                         "' has no rules-file representation");
    out << "family herrmann offset=" << offset->second << '\n';
  }
  return out.str();
}

SymbolSet parse_set_literal(std::string_view text) {
  std::string_view body = text;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
    body = body.substr(1, body.size() - 2);
  // "{}" and "{ }" denote the empty set.
  if (body.find_first_not_of(" \t") == std::string_view::npos &&
      body.size() != text.size())
    return {};
  if (body.empty()) throw parse_error("empty set literal; use {} for the empty set");

  SymbolSet out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view item =
        body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t'))
      item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t'))
      item.remove_suffix(1);
    if (item.empty()) throw parse_error("empty symbol in set literal");
    if (!out.insert(Symbol::parse(item)).second)
      throw parse_error("duplicate symbol '" + std::string(item) +
                        "' in set literal");
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace logicsys
