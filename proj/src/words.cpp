#include "hjx/words.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "hjx/error.hpp"

namespace hjx {

PositionSet make_position_set(std::vector<Position> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  if (!positions.empty() && positions.front() == 0) {
    throw InvalidArgument("positions start at 1");
  }
  return positions;
}

bool disjoint(std::span<const Position> a, std::span<const Position> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

Alphabet::Alphabet(std::uint32_t sigma, bool with_variable)
    : size(sigma), has_variable(with_variable) {
  if (sigma == 0) throw InvalidArgument("alphabet must be nonempty");
}

Symbol Alphabet::symbol(std::uint32_t i) const {
  if (i < size) return Symbol(i);
  if (has_variable && i == size) return kVariable;
  throw OutOfRange("symbol index " + std::to_string(i) + " outside alphabet");
}

std::uint32_t Alphabet::index_of(Symbol s) const {
  if (!admits(s)) throw OutOfRange("symbol outside alphabet");
  return s.is_variable() ? size : s.value();
}

bool Alphabet::admits(Symbol s) const {
  return s.is_variable() ? has_variable : s.value() < size;
}

// --- LocatedWord -------------------------------------------------------------

LocatedWord LocatedWord::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].position == 0) throw InvalidArgument("positions start at 1");
    if (i > 0 && entries[i].position == entries[i - 1].position) {
      throw InvalidArgument("position " + std::to_string(entries[i].position) +
                            " assigned twice");
    }
  }
  return LocatedWord(std::move(entries));
}

LocatedWord LocatedWord::constant_on(std::span<const Position> positions, Symbol s) {
  std::vector<Entry> entries;
  entries.reserve(positions.size());
  for (Position p : positions) entries.push_back({p, s});
  return from_entries(std::move(entries));
}

bool LocatedWord::contains(Position p) const { return at(p).has_value(); }

std::optional<Symbol> LocatedWord::at(Position p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& e, Position q) { return e.position < q; });
  if (it == entries_.end() || it->position != p) return std::nullopt;
  return it->symbol;
}

PositionSet LocatedWord::domain() const {
  PositionSet dom;
  dom.reserve(entries_.size());
  for (const Entry& e : entries_) dom.push_back(e.position);
  return dom;
}

bool LocatedWord::is_constant() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const Entry& e) { return e.symbol.is_variable(); });
}

bool LocatedWord::over(const Alphabet& alphabet) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return alphabet.admits(e.symbol); });
}

std::strong_ordering LocatedWord::operator<=>(const LocatedWord& other) const {
  if (auto c = entries_.size() <=> other.entries_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(entries_.begin(), entries_.end(),
                                                other.entries_.begin(), other.entries_.end());
}

std::string LocatedWord::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i].position);
    out += ':';
    if (entries_[i].symbol.is_variable()) {
      out += 'v';
    } else {
      out += std::to_string(entries_[i].symbol.value());
    }
  }
  out += '}';
  return out;
}

namespace {

std::uint32_t parse_u32(std::string_view text, std::string_view whole) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad integer '" + std::string(text) + "' in word " + std::string(whole));
  }
  return value;
}

}  // namespace

LocatedWord LocatedWord::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ParseError("word must be wrapped in braces: " + std::string(text));
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<Entry> entries;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("entry without ':' in word " + std::string(text));
    }
    Position pos = parse_u32(item.substr(0, colon), text);
    std::string_view sym = item.substr(colon + 1);
    Symbol s = sym == "v" ? kVariable : Symbol(parse_u32(sym, text));
    if (!s.is_variable() && s.value() == kVariable.value()) {
      throw ParseError("symbol out of range in word " + std::string(text));
    }
    entries.push_back({pos, s});
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw ParseError("trailing comma in word " + std::string(text));
  }
  LocatedWord w;
  try {
    w = from_entries(std::move(entries));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  // Bit-exact format: entries must already be listed in ascending order.
  if (w.to_string() != text) throw ParseError("non-canonical word text " + std::string(text));
  return w;
}

// --- ⊎ and θ_s -----------------------------------------------------------------

std::optional<LocatedWord> try_combine(const LocatedWord& a, const LocatedWord& b) {
  std::vector<Entry> merged;
  merged.reserve(a.size() + b.size());
  auto i = a.entries().begin();
  auto j = b.entries().begin();
  while (i != a.entries().end() && j != b.entries().end()) {
    if (i->position == j->position) return std::nullopt;
    if (i->position < j->position) {
      merged.push_back(*i++);
    } else {
      merged.push_back(*j++);
    }
  }
  merged.insert(merged.end(), i, a.entries().end());
  merged.insert(merged.end(), j, b.entries().end());
  return LocatedWord::from_entries(std::move(merged));
}

bool combinable(const LocatedWord& a, const LocatedWord& b) {
  auto i = a.entries().begin();
  auto j = b.entries().begin();
  while (i != a.entries().end() && j != b.entries().end()) {
    if (i->position == j->position) return false;
    if (i->position < j->position) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

LocatedWord combine(const LocatedWord& a, const LocatedWord& b) {
  auto product = try_combine(a, b);
  if (!product) {
    throw UndefinedProduct(a.to_string() + " and " + b.to_string() + " share a position");
  }
  return std::move(*product);
}

LocatedWord substitute(Symbol s, const LocatedWord& w) {
  if (s.is_variable()) throw InvalidArgument("θ_s needs a constant symbol");
  std::vector<Entry> entries(w.entries().begin(), w.entries().end());
  for (Entry& e : entries) {
    if (e.symbol.is_variable()) e.symbol = s;
  }
  return LocatedWord::from_entries(std::move(entries));
}

VariableWord::VariableWord(LocatedWord w) : word_(std::move(w)) {
  if (word_.is_constant()) throw NotAVariableWord(word_.to_string() + " has no v entry");
}

Decomposition decompose_variable_word(const VariableWord& w) {
  Decomposition parts;
  std::vector<Entry> constants;
  for (const Entry& e : w.word().entries()) {
    if (e.symbol.is_variable()) {
      parts.gamma.push_back(e.position);
    } else {
      constants.push_back(e);
    }
  }
  parts.alpha = LocatedWord::from_entries(std::move(constants));
  return parts;
}

Decomposition decompose_variable_word(const LocatedWord& w) {
  return decompose_variable_word(VariableWord(w));
}

VariableWord recombine(const Decomposition& parts) {
  return VariableWord(combine(parts.alpha, LocatedWord::constant_on(parts.gamma, kVariable)));
}

// --- universe ----------------------------------------------------------------

namespace {

constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return __builtin_mul_overflow(a, b, &out);
}

}  // namespace

std::uint64_t universe_size(std::uint32_t n, const Alphabet& alphabet, std::uint64_t cap) {
  const std::uint64_t base = std::uint64_t{alphabet.symbol_count()} + 1;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (mul_overflows(total, base, total) || total > cap) {
      throw ResourceLimit("universe for N=" + std::to_string(n) + " over " +
                          std::to_string(base - 1) + " symbols exceeds cap of " +
                          std::to_string(cap) + " words");
    }
  }
  return total;
}

std::vector<LocatedWord> enumerate_universe(std::uint32_t n, const Alphabet& alphabet,
                                            std::uint64_t cap) {
  if (n == 0) throw InvalidArgument("N must be at least 1");
  std::vector<LocatedWord> words;
  words.reserve(universe_size(n, alphabet, cap));

  const std::uint32_t c = alphabet.symbol_count();
  std::vector<Entry> prefix;
  // Emit all extensions of prefix by `remaining` entries at positions ≥ lo,
  // in lexicographic order of the entry list.
  auto extend = [&](auto&& self, std::uint32_t remaining, Position lo) -> void {
    if (remaining == 0) {
      words.push_back(LocatedWord::from_entries(prefix));
      return;
    }
    for (Position p = lo; p + remaining - 1 <= n; ++p) {
      for (std::uint32_t s = 0; s < c; ++s) {
        prefix.push_back({p, alphabet.symbol(s)});
        self(self, remaining - 1, p + 1);
        prefix.pop_back();
      }
    }
  };
  for (std::uint32_t m = 0; m <= n; ++m) extend(extend, m, 1);
  return words;
}

UniverseIndex::UniverseIndex(std::uint32_t n, const Alphabet& alphabet)
    : n_(n), alphabet_(alphabet), counts_((n + 1) * (n + 2), 0), offset_(n + 2, 0) {
  if (n == 0) throw InvalidArgument("N must be at least 1");
  universe_size(n, alphabet, kNoCap);  // overflow check only

  const std::uint64_t c = alphabet.symbol_count();
  for (std::uint32_t lo = 1; lo <= n + 1; ++lo) counts_[lo] = 1;
  for (std::uint32_t m = 1; m <= n; ++m) {
    for (std::uint32_t lo = n; lo >= 1; --lo) {
      counts_[m * (n + 2) + lo] = count(m, lo + 1) + c * count(m - 1, lo + 1);
    }
  }
  for (std::uint32_t m = 0; m <= n; ++m) offset_[m + 1] = offset_[m] + count(m, 1);
}

std::uint64_t UniverseIndex::rank(const LocatedWord& w) const {
  if (w.max_position() > n_) {
    throw OutOfRange(w.to_string() + " not in the N=" + std::to_string(n_) + " universe");
  }
  const std::uint64_t c = alphabet_.symbol_count();
  auto remaining = static_cast<std::uint32_t>(w.size());
  std::uint64_t r = offset_[remaining];
  Position lo = 1;
  for (const Entry& e : w.entries()) {
    for (Position q = lo; q < e.position; ++q) r += c * count(remaining - 1, q + 1);
    r += alphabet_.index_of(e.symbol) * count(remaining - 1, e.position + 1);
    lo = e.position + 1;
    --remaining;
  }
  return r;
}

LocatedWord UniverseIndex::unrank(std::uint64_t index) const {
  if (index >= size()) {
    throw OutOfRange("rank " + std::to_string(index) + " outside universe of size " +
                     std::to_string(size()));
  }
  std::uint32_t m = 0;
  while (offset_[m + 1] <= index) ++m;
  index -= offset_[m];

  const std::uint64_t c = alphabet_.symbol_count();
  std::vector<Entry> entries;
  Position lo = 1;
  for (std::uint32_t remaining = m; remaining > 0; --remaining) {
    for (Position p = lo;; ++p) {
      const std::uint64_t tail = count(remaining - 1, p + 1);
      if (index < c * tail) {
        entries.push_back({p, alphabet_.symbol(static_cast<std::uint32_t>(index / tail))});
        index %= tail;
        lo = p + 1;
        break;
      }
      index -= c * tail;
    }
  }
  return LocatedWord::from_entries(std::move(entries));
}

std::uint64_t rank(const LocatedWord& w, std::uint32_t n, const Alphabet& alphabet) {
  return UniverseIndex(n, alphabet).rank(w);
}

LocatedWord unrank(std::uint64_t index, std::uint32_t n, const Alphabet& alphabet) {
  return UniverseIndex(n, alphabet).unrank(index);
}

}  // namespace hjx
