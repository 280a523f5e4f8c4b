#include "logicsys/rules.hpp"

#include <set>
#include <sstream>

namespace logicsys {

std::string RuleTuple::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ',';
    out << coords_[i].to_string();
  }
  out << ')';
  return out.str();
}

std::vector<std::string> validate(const RuleSystem& system) {
  std::vector<std::string> diags;

  for (const auto& s : system.axioms) {
    if (!system.language.contains(s))
      diags.push_back("axiom symbol '" + s.to_string() + "' not in language");
  }

  std::set<std::string> ids;
  for (const auto& rel : system.relations) {
    if (!ids.insert(rel.id).second)
      diags.push_back("duplicate relation id '" + rel.id + "'");
    if (rel.arity < 1)
      diags.push_back("relation '" + rel.id + "' declares arity 0");
    for (const auto& t : rel.tuples) {
      if (t.arity() != rel.arity) {
        diags.push_back("relation '" + rel.id + "' (arity " +
                        std::to_string(rel.arity) + ") contains tuple " +
                        t.to_string() + " of arity " +
                        std::to_string(t.arity()));
      }
      for (const auto& s : t.coords()) {
        if (!system.language.contains(s))
          diags.push_back("tuple " + t.to_string() + " in relation '" + rel.id +
                          "' mentions symbol '" + s.to_string() +
                          "' not in language");
      }
    }
  }

  std::set<std::string> gen_names;
  for (const auto& g : system.generators) {
    if (!gen_names.insert(g.name).second)
      diags.push_back("duplicate generator name '" + g.name + "'");
    if (!g.applicable)
      diags.push_back("generator '" + g.name + "' has no applicable function");
  }

  return diags;
}

bool is_finite_system(const RuleSystem& system) {
  return system.generators.empty();
}

}  // namespace logicsys
