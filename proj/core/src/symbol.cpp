#include "logicsys/symbol.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace logicsys {

Symbol Symbol::parse(std::string_view text) {
  if (text.empty()) throw parse_error("empty symbol");
  bool all_digits = true;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      all_digits = false;
      break;
    }
  }
  // Canonical decimal only: "007" is a token, not the natural 7.
  if (all_digits && (text.size() == 1 || text.front() != '0')) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc() && ptr == text.data() + text.size()) return natural(v);
    throw parse_error("natural symbol out of range: '" + std::string(text) + "'");
  }
  return token(std::string(text));
}

std::string to_string(const SymbolSet& set) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& s : set) {
    if (!first) out << ", ";
    first = false;
    out << s.to_string();
  }
  out << '}';
  return out.str();
}

}  // namespace logicsys
