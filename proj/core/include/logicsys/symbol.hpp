#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logicsys {

/// Base error type for the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (rule files, set literals, table JSON).
class parse_error : public error {
 public:
  using error::error;
};

/// Violated operation precondition (unknown symbol, language mismatch, ...).
class domain_error : public error {
 public:
  using error::error;
};

/// Closure exceeded its firing budget.
class budget_exceeded : public error {
 public:
  using error::error;
};

/// A symbol is either a natural number (canonical decimal) or a token.
/// Tokens are nonempty and contain no whitespace. Canonical order is numeric
/// for naturals and lexicographic for tokens; naturals sort before tokens so
/// mixed sets still have a total order.
class Symbol {
 public:
  static Symbol natural(std::uint64_t value) {
    Symbol s;
    s.is_nat_ = true;
    s.value_ = value;
    return s;
  }

  static Symbol token(std::string text) {
    if (text.empty()) throw domain_error("symbol token must be nonempty");
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        throw domain_error("symbol token must not contain whitespace: '" + text + "'");
    }
    Symbol s;
    s.is_nat_ = false;
    s.text_ = std::move(text);
    return s;
  }

  /// Canonical decimal strings become naturals, everything else a token.
  static Symbol parse(std::string_view text);

  bool is_natural() const { return is_nat_; }

  std::uint64_t value() const {
    if (!is_nat_) throw domain_error("token symbol has no numeric value");
    return value_;
  }

  std::string to_string() const {
    return is_nat_ ? std::to_string(value_) : text_;
  }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.is_nat_ == b.is_nat_ && a.value_ == b.value_ && a.text_ == b.text_;
  }

  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    if (a.is_nat_ != b.is_nat_)
      return a.is_nat_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_nat_) return a.value_ <=> b.value_;
    return a.text_ <=> b.text_;
  }

 private:
  Symbol() = default;
  bool is_nat_ = true;
  std::uint64_t value_ = 0;
  std::string text_;
};

/// Finite set of symbols in canonical order.
using SymbolSet = std::set<Symbol>;

std::string to_string(const SymbolSet& set);

/// A language is either an explicit finite symbol set or the unbounded
/// natural-number universe.
class Language {
 public:
  static Language naturals() { return Language(true, {}); }

  static Language explicit_set(SymbolSet symbols) {
    if (symbols.empty()) throw domain_error("explicit language must be nonempty");
    return Language(false, std::move(symbols));
  }

  bool is_naturals() const { return naturals_; }

  const SymbolSet& symbols() const {
    if (naturals_) throw domain_error("naturals language has no explicit symbol set");
    return symbols_;
  }

  std::size_t size() const { return symbols().size(); }

  bool contains(const Symbol& s) const {
    if (naturals_) return s.is_natural();
    return symbols_.count(s) != 0;
  }

  bool contains(const SymbolSet& set) const {
    for (const auto& s : set)
      if (!contains(s)) return false;
    return true;
  }

  friend bool operator==(const Language& a, const Language& b) {
    return a.naturals_ == b.naturals_ && a.symbols_ == b.symbols_;
  }

 private:
  Language(bool naturals, SymbolSet symbols)
      : naturals_(naturals), symbols_(std::move(symbols)) {}
  bool naturals_;
  SymbolSet symbols_;
};

inline SymbolSet set_union(const SymbolSet& a, const SymbolSet& b) {
  SymbolSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

inline bool is_subset(const SymbolSet& a, const SymbolSet& b) {
  for (const auto& s : a)
    if (!b.count(s)) return false;
  return true;
}

}  // namespace logicsys
