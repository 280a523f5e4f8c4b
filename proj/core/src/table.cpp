#include "logicsys/table.hpp"

#include <bit>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "logicsys/engine.hpp"

namespace logicsys {

OperatorTable::OperatorTable(Language language, std::vector<std::uint32_t> image)
    : language_(std::move(language)), image_(std::move(image)) {
  if (language_.is_naturals())
    throw domain_error("operator table requires an explicit language");
  if (language_.size() > kMaxTableLanguage)
    throw domain_error("language too large for tabulation (max " +
                       std::to_string(kMaxTableLanguage) + " symbols)");
  symbols_.assign(language_.symbols().begin(), language_.symbols().end());
  const std::size_t expected = std::size_t{1} << symbols_.size();
  if (image_.size() != expected)
    throw domain_error("operator table must map all " +
                       std::to_string(expected) + " subsets");
  const std::uint32_t full = static_cast<std::uint32_t>(expected - 1);
  for (std::uint32_t img : image_)
    if (img & ~full) throw domain_error("image contains bits outside language");
}

std::uint32_t OperatorTable::mask_of(const SymbolSet& set) const {
  std::uint32_t mask = 0;
  for (const auto& s : set) {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
    if (it == symbols_.end() || *it != s)
      throw domain_error("symbol '" + s.to_string() + "' not in table language");
    mask |= std::uint32_t{1} << (it - symbols_.begin());
  }
  return mask;
}

SymbolSet OperatorTable::set_of(std::uint32_t mask) const {
  SymbolSet set;
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (mask & (std::uint32_t{1} << i)) set.insert(symbols_[i]);
  return set;
}

OperatorTable table_from_system(const RuleSystem& system,
                                const Language& language) {
  if (language.is_naturals())
    throw domain_error("tabulation requires an explicit language");
  if (language.size() > kMaxTableLanguage)
    throw domain_error("language too large for tabulation (max " +
                       std::to_string(kMaxTableLanguage) + " symbols)");

  std::vector<Symbol> symbols(language.symbols().begin(),
                              language.symbols().end());
  const std::size_t n = symbols.size();
  std::vector<std::uint32_t> image(std::size_t{1} << n);
  for (std::uint32_t subset = 0; subset < image.size(); ++subset) {
    SymbolSet x;
    for (std::size_t i = 0; i < n; ++i)
      if (subset & (std::uint32_t{1} << i)) x.insert(symbols[i]);
    SymbolSet closed = close(system, x).closure;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (closed.count(symbols[i])) mask |= std::uint32_t{1} << i;
    // Symbols outside the tabulation language would be silently dropped;
    // reject them instead.
    for (const auto& s : closed)
      if (!language.contains(s))
        throw domain_error("closure escapes tabulation language at symbol '" +
                           s.to_string() + "'");
    image[subset] = mask;
  }
  return OperatorTable(language, std::move(image));
}

bool check_axiom_i(const OperatorTable& t) {
  for (std::uint32_t x = 0; x < t.subset_count(); ++x) {
    std::uint32_t img = t.image(x);
    if ((x & img) != x) return false;        // X subset of C(X)
    if (t.image(img) != img) return false;   // C(C(X)) = C(X)
  }
  return true;
}

bool check_axiom_ii(const OperatorTable& t) {
  // Single-element steps X subset of X+{i} suffice: any chain X subset of Y
  // factors through them and subset-inclusion is transitive.
  const std::size_t n = t.width();
  for (std::uint32_t x = 0; x < t.subset_count(); ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t bit = std::uint32_t{1} << i;
      if (x & bit) continue;
      if ((t.image(x) & ~t.image(x | bit)) != 0) return false;
    }
  }
  return true;
}

bool check_axiom_iii(const OperatorTable& t) {
  // union_image[X] = union of image(A) over all A subset of X, built by
  // popcount-increasing DP over immediate subsets.
  std::vector<std::uint32_t> union_image(t.subset_count());
  for (std::uint32_t x = 0; x < t.subset_count(); ++x) {
    std::uint32_t u = t.image(x);
    std::uint32_t rest = x;
    while (rest) {
      std::uint32_t bit = rest & (~rest + 1);
      rest &= rest - 1;
      u |= union_image[x & ~bit];
    }
    union_image[x] = u;
    if (u != t.image(x)) return false;
  }
  return true;
}

namespace {

void require_same_language(const OperatorTable& a, const OperatorTable& b) {
  if (!(a.language() == b.language()))
    throw domain_error("operator tables are over different languages");
}

void require_operator(const OperatorTable& t, const char* which) {
  if (!check_axiom_i(t) || !check_axiom_ii(t) || !check_axiom_iii(t))
    throw domain_error(std::string(which) +
                       " input is not a finite consequence operator");
}

}  // namespace

bool leq(const OperatorTable& a, const OperatorTable& b) {
  require_same_language(a, b);
  for (std::uint32_t x = 0; x < a.subset_count(); ++x)
    if (a.image(x) & ~b.image(x)) return false;
  return true;
}

OperatorTable meet(const OperatorTable& a, const OperatorTable& b) {
  require_same_language(a, b);
  require_operator(a, "meet");
  require_operator(b, "meet");
  std::vector<std::uint32_t> image(a.subset_count());
  for (std::uint32_t x = 0; x < a.subset_count(); ++x)
    image[x] = a.image(x) & b.image(x);
  return OperatorTable(a.language(), std::move(image));
}

OperatorTable join(const OperatorTable& a, const OperatorTable& b) {
  require_same_language(a, b);
  require_operator(a, "join");
  require_operator(b, "join");
  std::vector<std::uint32_t> image(a.subset_count());
  for (std::uint32_t x = 0; x < a.subset_count(); ++x) {
    std::uint32_t m = x;
    for (;;) {
      std::uint32_t next = b.image(a.image(m));
      if (next == m) break;  // both operators extensive, so this terminates
      m = next;
    }
    image[x] = m;
  }
  return OperatorTable(a.language(), std::move(image));
}

void save_table(const OperatorTable& t, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["language"] = nlohmann::ordered_json::array();
  for (const auto& s : t.sorted_symbols())
    doc["language"].push_back(s.to_string());
  auto entries = nlohmann::ordered_json::array();
  for (std::uint32_t x = 0; x < t.subset_count(); ++x) {
    auto subset = nlohmann::ordered_json::array();
    auto img = nlohmann::ordered_json::array();
    for (const auto& s : t.set_of(x)) subset.push_back(s.to_string());
    for (const auto& s : t.set_of(t.image(x))) img.push_back(s.to_string());
    entries.push_back(nlohmann::ordered_json::array({subset, img}));
  }
  doc["entries"] = std::move(entries);
  out << doc.dump(2) << '\n';
}

OperatorTable load_table(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("table file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("language") || !doc.contains("entries"))
    throw parse_error("table file must have 'language' and 'entries'");

  SymbolSet symbols;
  for (const auto& item : doc["language"]) {
    if (!item.is_string()) throw parse_error("language entries must be strings");
    if (!symbols.insert(Symbol::parse(item.get<std::string>())).second)
      throw parse_error("duplicate symbol in language");
  }
  Language language = Language::explicit_set(symbols);
  if (language.size() > kMaxTableLanguage)
    throw parse_error("table language too large");

  OperatorTable scratch(language,
                        std::vector<std::uint32_t>(
                            std::size_t{1} << language.size(), 0));
  std::vector<std::uint32_t> image(scratch.subset_count(), 0);
  std::vector<bool> present(scratch.subset_count(), false);
  for (const auto& entry : doc["entries"]) {
    if (!entry.is_array() || entry.size() != 2)
      throw parse_error("each entry must be a [subset, image] pair");
    auto read_set = [&](const nlohmann::json& arr) {
      SymbolSet s;
      for (const auto& item : arr) {
        if (!item.is_string()) throw parse_error("set entries must be strings");
        if (!s.insert(Symbol::parse(item.get<std::string>())).second)
          throw parse_error("duplicate symbol in entry set");
      }
      return s;
    };
    std::uint32_t subset, img;
    try {
      subset = scratch.mask_of(read_set(entry[0]));
      img = scratch.mask_of(read_set(entry[1]));
    } catch (const domain_error& e) {
      throw parse_error(e.what());
    }
    if (present[subset]) throw parse_error("duplicate subset entry");
    present[subset] = true;
    image[subset] = img;
  }
  for (bool p : present)
    if (!p) throw parse_error("table file does not cover all subsets");
  return OperatorTable(language, std::move(image));
}

}  // namespace logicsys
