#pragma once

// Located words over a finite alphabet: finite partial maps from positive
// positions to symbols, with the partial union operation ⊎ and the
// substitution maps θ_s on variable words.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hjx {

using Position = std::uint32_t;

/// Sorted, duplicate-free list of positive positions.
using PositionSet = std::vector<Position>;

/// Sorts, deduplicates and checks that every position is ≥ 1.
PositionSet make_position_set(std::vector<Position> positions);

bool disjoint(std::span<const Position> a, std::span<const Position> b);

/// A constant symbol 0..σ−1, or the out-of-band variable v. The variable
/// compares greater than every constant.
class Symbol {
 public:
  constexpr Symbol() = default;
  constexpr explicit Symbol(std::uint32_t constant) : value_(constant) {}

  static constexpr Symbol variable() { return Symbol(kVariableValue); }

  constexpr bool is_variable() const { return value_ == kVariableValue; }
  constexpr std::uint32_t value() const { return value_; }

  friend constexpr auto operator<=>(Symbol, Symbol) = default;

 private:
  static constexpr std::uint32_t kVariableValue = 0xffffffffu;
  std::uint32_t value_ = 0;
};

inline constexpr Symbol kVariable = Symbol::variable();

struct Alphabet {
  std::uint32_t size = 1;     // σ constants, canonically 0..σ−1
  bool has_variable = false;  // whether v is adjoined

  Alphabet() = default;
  Alphabet(std::uint32_t sigma, bool with_variable = false);

  /// Number of distinct symbols a position may carry.
  std::uint32_t symbol_count() const { return size + (has_variable ? 1 : 0); }

  /// Symbol with index i in canonical order (constants, then v).
  Symbol symbol(std::uint32_t i) const;
  std::uint32_t index_of(Symbol s) const;
  bool admits(Symbol s) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

struct Entry {
  Position position = 1;
  Symbol symbol;

  friend auto operator<=>(const Entry&, const Entry&) = default;
};

class LocatedWord {
 public:
  LocatedWord() = default;

  /// Throws InvalidArgument on a zero position or a repeated position.
  static LocatedWord from_entries(std::vector<Entry> entries);

  /// γ × {s}.
  static LocatedWord constant_on(std::span<const Position> positions, Symbol s);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool contains(Position p) const;
  std::optional<Symbol> at(Position p) const;
  PositionSet domain() const;
  Position max_position() const { return entries_.empty() ? 0 : entries_.back().position; }

  bool is_constant() const;
  bool has_variable() const { return !is_constant(); }
  bool over(const Alphabet& alphabet) const;

  bool operator==(const LocatedWord&) const = default;

  /// Canonical order: domain size first, then lexicographic on the sorted
  /// (position, symbol) entry list.
  std::strong_ordering operator<=>(const LocatedWord& other) const;

  /// `{2:v,5:0,7:v}`; `{}` for the empty word.
  std::string to_string() const;
  static LocatedWord parse(std::string_view text);

 private:
  explicit LocatedWord(std::vector<Entry> sorted) : entries_(std::move(sorted)) {}

  std::vector<Entry> entries_;
};

/// a ⊎ b. Throws UndefinedProduct when the domains intersect.
LocatedWord combine(const LocatedWord& a, const LocatedWord& b);

/// a ⊎ b, or nullopt when undefined.
std::optional<LocatedWord> try_combine(const LocatedWord& a, const LocatedWord& b);

bool combinable(const LocatedWord& a, const LocatedWord& b);

/// θ_s: every v becomes s, constants are kept. Throws InvalidArgument if s
/// is the variable.
LocatedWord substitute(Symbol s, const LocatedWord& w);

/// A located word over Σ∪{v} in which v occurs.
class VariableWord {
 public:
  /// Throws NotAVariableWord when w has no v entry.
  explicit VariableWord(LocatedWord w);

  const LocatedWord& word() const { return word_; }

 private:
  LocatedWord word_;
};

struct Decomposition {
  LocatedWord alpha;  // constant part
  PositionSet gamma;  // positions carrying v
};

/// β = α ∪ γ×{v}, uniquely.
Decomposition decompose_variable_word(const VariableWord& w);
Decomposition decompose_variable_word(const LocatedWord& w);

/// α ⊎ γ×{v}.
VariableWord recombine(const Decomposition& parts);

// --- bounded universe: all words with dom ⊆ [N] ---------------------------

inline constexpr std::uint64_t kDefaultUniverseCap = std::uint64_t{1} << 20;

/// (c+1)^N where c = alphabet.symbol_count(): each position is absent or
/// carries one of c symbols. Throws ResourceLimit if it exceeds cap.
std::uint64_t universe_size(std::uint32_t n, const Alphabet& alphabet,
                            std::uint64_t cap = kDefaultUniverseCap);

/// Every word with dom ⊆ [N], each once, in canonical order.
std::vector<LocatedWord> enumerate_universe(std::uint32_t n, const Alphabet& alphabet,
                                            std::uint64_t cap = kDefaultUniverseCap);

/// Precomputed counting table for ranking words of one N-universe.
class UniverseIndex {
 public:
  /// Throws ResourceLimit when the universe does not fit in 64 bits.
  UniverseIndex(std::uint32_t n, const Alphabet& alphabet);

  std::uint32_t n() const { return n_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::uint64_t size() const { return offset_.back(); }

  std::uint64_t rank(const LocatedWord& w) const;
  LocatedWord unrank(std::uint64_t index) const;

 private:
  // words of size m with every position in [lo..n]
  std::uint64_t count(std::uint32_t m, std::uint32_t lo) const {
    return counts_[m * (n_ + 2) + lo];
  }

  std::uint32_t n_;
  Alphabet alphabet_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> offset_;  // offset_[m] = words of size < m
};

/// Index of w in the canonical enumeration of the N-universe.
/// Throws OutOfRange when dom w ⊄ [N] or w uses a symbol outside the alphabet.
std::uint64_t rank(const LocatedWord& w, std::uint32_t n, const Alphabet& alphabet);

/// Inverse of rank. Throws OutOfRange for index ≥ universe size.
LocatedWord unrank(std::uint64_t index, std::uint32_t n, const Alphabet& alphabet);

}  // namespace hjx
