#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "logicsys/rules.hpp"

namespace logicsys {

/// Line-oriented rules file:
///   axiom <sym> ...
///   rule <p1> ... <pk> -> <c1> ... <cm>
///   family <name> offset=<m>
/// '#' starts a comment; blank lines are ignored. Natural-number symbols and
/// token symbols never mix in one file. Files with token symbols get an
/// explicit language of the mentioned symbols, everything else the naturals.
RuleSystem parse_rules(std::istream& in);
RuleSystem parse_rules_file(const std::string& path);

/// Canonical form: one axiom line, one rule line per tuple (single
/// conclusion) sorted by arity then coordinates, family lines last.
/// parse(emit(s)) == s for every parseable system.
std::string emit_rules(const RuleSystem& system);

/// Comma-separated symbols, e.g. "0,1,5"; "{}" denotes the empty set.
/// Duplicates are rejected.
SymbolSet parse_set_literal(std::string_view text);

}  // namespace logicsys
