// Command-line surface for the logicsys library: closures with optional
// deduction traces, operator tabulation and axiom checks, the paper
// experiments, and the derivation-to-rules compilers.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logicsys/constructions.hpp"
#include "logicsys/engine.hpp"
#include "logicsys/rules_io.hpp"
#include "logicsys/table.hpp"

namespace {

using namespace logicsys;

RuleSystem load_system(const std::string& rules_path,
                       const std::string& family, std::uint64_t offset) {
  if (!rules_path.empty()) return parse_rules_file(rules_path);
  if (family == "herrmann") return block_family(offset);
  throw parse_error("unknown family '" + family + "'");
}

OperatorTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open table file '" + path + "'");
  return load_table(in);
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw domain_error("cannot open output file '" + out_path + "'");
  out << text;
}

std::string describe(const Justification& why) {
  switch (why.kind) {
    case Justification::Kind::insertion_premise:
      return "premise";
    case Justification::Kind::insertion_axiom:
      return "axiom";
    case Justification::Kind::rule:
      return "rule " + why.source + " " + why.tuple->to_string();
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logic-systems and finite consequence operators"};
  app.require_subcommand(1);

  std::string rules_path, family = "herrmann", set_literal, table_path;
  std::string out_path, encoding = "wide";
  std::string hypotheses, axioms_used = "{}", conclusions, offsets_literal;
  std::uint64_t offset = 0;
  std::size_t budget = kDefaultBudget, max_arity = 2;
  bool want_trace = false;
  std::vector<std::string> join_paths;

  auto* cmd_close = app.add_subcommand("close", "closure of a symbol set");
  cmd_close->add_option("--rules", rules_path, "rules file");
  cmd_close->add_option("--family", family, "generator family name");
  cmd_close->add_option("--offset", offset, "family offset");
  cmd_close->add_option("--set", set_literal, "input set literal")->required();
  cmd_close->add_flag("--trace", want_trace, "print the deduction trace");
  cmd_close->add_option("--budget", budget, "rule-firing budget");

  auto* cmd_table = app.add_subcommand("table", "tabulate the operator");
  cmd_table->add_option("--rules", rules_path, "rules file")->required();
  cmd_table->add_option("--language", set_literal, "explicit language literal");
  cmd_table->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_check = app.add_subcommand("check", "Tarski axiom checks");
  cmd_check->add_option("--table", table_path, "table file")->required();

  auto* cmd_ristar = app.add_subcommand("ristar", "rules generating a table");
  cmd_ristar->add_option("--table", table_path, "table file")->required();
  cmd_ristar->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_roundtrip =
      app.add_subcommand("roundtrip", "re-tabulate ristar and compare");
  cmd_roundtrip->add_option("--table", table_path, "table file")->required();

  auto* cmd_thm22 = app.add_subcommand("thm22", "truncation disagreement witness");
  cmd_thm22->add_option("--max-arity", max_arity, "maximum arity p >= 2")
      ->required();

  auto* cmd_distinct =
      app.add_subcommand("distinct", "pairwise family distinctness witnesses");
  cmd_distinct->add_option("--offsets", offsets_literal, "offset list, e.g. 0,1,2")
      ->required();

  auto* cmd_derive =
      app.add_subcommand("derive-rules", "compile a derivation into rules");
  cmd_derive->add_option("--hypotheses", hypotheses, "set literal")->required();
  cmd_derive->add_option("--axioms", axioms_used, "set literal (default {})");
  cmd_derive->add_option("--conclusions", conclusions, "set literal")->required();
  cmd_derive->add_option("--encoding", encoding, "wide or chained")
      ->check(CLI::IsMember({"wide", "chained"}));

  auto* cmd_join =
      app.add_subcommand("join", "union operator vs lattice join of operators");
  cmd_join->add_option("--rules", join_paths, "rules files (2 to 4)")
      ->required()
      ->expected(2, 4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*cmd_close) {
      RuleSystem system = load_system(rules_path, family, offset);
      SymbolSet x = parse_set_literal(set_literal);
      ClosureResult result = close(system, x, budget);
      std::cout << to_string(result.closure) << '\n';
      if (want_trace) {
        std::cout << "trace:\n";
        std::size_t i = 0;
        for (const auto& step : result.trace.steps)
          std::cout << "  " << ++i << ". " << step.symbol.to_string() << ' '
                    << describe(step.why) << '\n';
      }
    } else if (*cmd_table) {
      RuleSystem system = parse_rules_file(rules_path);
      Language language = system.language;
      if (!set_literal.empty())
        language = Language::explicit_set(parse_set_literal(set_literal));
      else if (language.is_naturals())
        throw parse_error("naturals-language rules need --language for tabulation");
      std::ostringstream text;
      save_table(table_from_system(system, language), text);
      write_output(out_path, text.str());
    } else if (*cmd_check) {
      OperatorTable t = load_table_file(table_path);
      bool i = check_axiom_i(t);
      bool ii = check_axiom_ii(t);
      bool iii = check_axiom_iii(t);
      std::cout << "axiom-i: " << (i ? "pass" : "fail") << '\n'
                << "axiom-ii: " << (ii ? "pass" : "fail") << '\n'
                << "axiom-iii: " << (iii ? "pass" : "fail") << '\n';
      if (i && iii)
        std::cout << "remark-1.2: " << (ii ? "pass" : "violated") << '\n';
    } else if (*cmd_ristar) {
      write_output(out_path, emit_rules(ri_star(load_table_file(table_path))));
    } else if (*cmd_roundtrip) {
      bool equal = roundtrip_check(load_table_file(table_path));
      std::cout << "equal: " << (equal ? "true" : "false") << '\n';
    } else if (*cmd_thm22) {
      std::cout << to_text(thm22_experiment(max_arity));
    } else if (*cmd_distinct) {
      std::vector<std::uint64_t> offsets;
      for (const auto& s : parse_set_literal(offsets_literal)) {
        if (!s.is_natural())
          throw parse_error("offsets must be natural numbers");
        offsets.push_back(s.value());
      }
      std::cout << to_text(distinctness_experiment(offsets));
    } else if (*cmd_derive) {
      Derivation d;
      d.hypotheses = parse_set_literal(hypotheses);
      d.axioms_used = parse_set_literal(axioms_used);
      d.conclusions = parse_set_literal(conclusions);
      auto enc = encoding == "wide" ? DerivationEncoding::wide
                                    : DerivationEncoding::chained;
      RuleSystem system;
      SymbolSet all = set_union(set_union(d.hypotheses, d.axioms_used),
                                d.conclusions);
      system.language = Language::explicit_set(all);
      system.relations = rules_from_derivation(d, enc);
      std::cout << emit_rules(system);
    } else if (*cmd_join) {
      std::vector<RuleSystem> systems;
      for (const auto& path : join_paths)
        systems.push_back(parse_rules_file(path));
      std::cout << to_text(join_experiment(systems));
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
