#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "logicsys/rules.hpp"
#include "logicsys/symbol.hpp"

namespace logicsys {

inline constexpr std::size_t kMaxTableLanguage = 20;

/// A consequence operator on an explicit language given extensionally: one
/// image per subset. Subsets are bitmasks over the sorted language (bit i =
/// i-th symbol in canonical order). Def 1.1 compliance is checked separately.
class OperatorTable {
 public:
  OperatorTable(Language language, std::vector<std::uint32_t> image);

  const Language& language() const { return language_; }
  std::size_t width() const { return symbols_.size(); }
  std::size_t subset_count() const { return image_.size(); }

  std::uint32_t image(std::uint32_t subset) const { return image_[subset]; }
  SymbolSet image(const SymbolSet& subset) const {
    return set_of(image(mask_of(subset)));
  }

  std::uint32_t mask_of(const SymbolSet& set) const;
  SymbolSet set_of(std::uint32_t mask) const;
  const std::vector<Symbol>& sorted_symbols() const { return symbols_; }

  friend bool operator==(const OperatorTable& a, const OperatorTable& b) {
    return a.language_ == b.language_ && a.image_ == b.image_;
  }

 private:
  Language language_;
  std::vector<Symbol> symbols_;
  std::vector<std::uint32_t> image_;
};

/// Tabulates close(system, X) over every subset of an explicit language with
/// at most kMaxTableLanguage symbols.
OperatorTable table_from_system(const RuleSystem& system,
                                const Language& language);

/// Extensiveness and idempotence: X subset of C(X) = C(C(X)) subset of L.
bool check_axiom_i(const OperatorTable& t);

/// Monotonicity: X subset of Y implies C(X) subset of C(Y).
bool check_axiom_ii(const OperatorTable& t);

/// Finitary: C(X) equals the union of C(A) over all A subset of X.
bool check_axiom_iii(const OperatorTable& t);

/// Pointwise order on operators over the same language.
bool leq(const OperatorTable& a, const OperatorTable& b);

/// Pointwise intersection. Both inputs must satisfy axioms (i)-(iii).
OperatorTable meet(const OperatorTable& a, const OperatorTable& b);

/// Least upper bound: per subset, the fixpoint of alternately applying both
/// operators. Both inputs must satisfy axioms (i)-(iii).
OperatorTable join(const OperatorTable& a, const OperatorTable& b);

/// JSON table file: {"language": [...], "entries": [[subset, image], ...]},
/// all subsets present, arrays canonically sorted, entries in bitmask order.
void save_table(const OperatorTable& t, std::ostream& out);
OperatorTable load_table(std::istream& in);

}  // namespace logicsys
