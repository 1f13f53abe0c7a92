#pragma once

// Combinatorial lines, extended lines (α, γ, F) and the integer
// configuration sets built from b(a+id)^j.

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "hjx/bigint.hpp"
#include "hjx/words.hpp"

namespace hjx {

/// Orders position sets by size, then lexicographically.
std::strong_ordering compare_sets(const PositionSet& a, const PositionSet& b);

/// Nonempty subsets of `ground` (sorted) in size-then-lex order.
std::vector<PositionSet> nonempty_subsets(const PositionSet& ground);

enum class FamilyKind {
  ArithmeticProgressions,  // {a, a+d, ..., a+kd}
  List,                    // explicit members
  PlainLines,              // no F: classical combinatorial lines
};

/// A partition regular family of finite position sets, seen through the
/// window [N]. Members never include singletons.
class ConfigFamily {
 public:
  /// All (k+1)-term progressions inside [window]. Throws WindowTooSmall when
  /// window < k+1 and InvalidArgument when k = 0.
  static ConfigFamily arithmetic(std::uint32_t k, std::uint32_t window);

  /// Throws InvalidArgument for members with fewer than two elements or
  /// elements outside [window].
  static ConfigFamily list(std::vector<PositionSet> members, std::uint32_t window);

  /// The degenerate mode in which the engine searches classical lines.
  static ConfigFamily plain(std::uint32_t window);

  FamilyKind kind() const { return kind_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t window() const { return window_; }

  /// Members in size-then-lex order. Empty for PlainLines.
  const std::vector<PositionSet>& members() const { return members_; }
  bool contains(const PositionSet& set) const;

  /// The same family seen through window n. Progressions are regenerated,
  /// list members that do not fit are dropped.
  ConfigFamily at_window(std::uint32_t n) const;

  bool operator==(const ConfigFamily&) const = default;

 private:
  ConfigFamily(FamilyKind kind, std::uint32_t k, std::uint32_t window,
               std::vector<PositionSet> members)
      : kind_(kind), k_(k), window_(window), members_(std::move(members)) {}

  FamilyKind kind_;
  std::uint32_t k_ = 0;
  std::uint32_t window_ = 0;
  std::vector<PositionSet> members_;
};

/// Same as ConfigFamily::arithmetic(k, n).members() wrapped as a family.
ConfigFamily ap_family(std::uint32_t k, std::uint32_t n);

/// {α ∪ γ×{s} : s ∈ Σ}, ordered by s. Throws OverlappingDomains when
/// dom α ∩ γ ≠ ∅ and InvalidArgument when γ is empty.
std::vector<LocatedWord> combinatorial_line(const LocatedWord& alpha, const PositionSet& gamma,
                                            const Alphabet& alphabet);

class ExtendedLine {
 public:
  /// Throws OverlappingDomains unless dom α, γ and F are pairwise disjoint,
  /// InvalidArgument when γ is empty, |F| < 2, or α is not a constant word
  /// over the alphabet.
  static ExtendedLine make(LocatedWord alpha, PositionSet gamma, PositionSet extensions,
                           Alphabet alphabet);

  const LocatedWord& alpha() const { return alpha_; }
  const PositionSet& gamma() const { return gamma_; }
  /// The family member F.
  const PositionSet& extensions() const { return extensions_; }
  const Alphabet& alphabet() const { return alphabet_; }

  /// α ∪ (γ∪{t})×{s}.
  LocatedWord point(Symbol s, Position t) const;

  /// Line order: F, then γ, then α.
  std::strong_ordering operator<=>(const ExtendedLine& other) const;
  bool operator==(const ExtendedLine& other) const = default;

 private:
  ExtendedLine() = default;

  LocatedWord alpha_;
  PositionSet gamma_;
  PositionSet extensions_;
  Alphabet alphabet_;
};

/// All σ·|F| points, in canonical word order.
std::vector<LocatedWord> extended_line_points(const ExtendedLine& line);

inline constexpr std::uint64_t kDefaultLineCap = std::uint64_t{1} << 24;

/// Visits every extended line inside [N] with F a member of the family, in
/// line order. The callback returns false to stop early.
void for_each_extended_line(std::uint32_t n, const Alphabet& alphabet,
                            const ConfigFamily& family,
                            const std::function<bool(const ExtendedLine&)>& visit);

/// Materialized form. Throws ResourceLimit above cap lines and
/// InvalidArgument when the family window exceeds N.
std::vector<ExtendedLine> enumerate_extended_lines(std::uint32_t n, const Alphabet& alphabet,
                                                   const ConfigFamily& family,
                                                   std::uint64_t cap = kDefaultLineCap);

struct PlainLine {
  LocatedWord alpha;
  PositionSet gamma;
};

/// Every combinatorial line inside [N], ordered by γ then α.
void for_each_plain_line(std::uint32_t n, const Alphabet& alphabet,
                         const std::function<bool(const PlainLine&)>& visit);

// --- integer configurations --------------------------------------------------

/// Inclusive index range; ôk is {0, k} and n̂k is {1, k}. Empty when lo > hi.
struct IndexRange {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  static IndexRange zero_to(std::uint32_t k) { return {0, k}; }
  static IndexRange one_to(std::uint32_t k) { return {1, k}; }

  bool empty() const { return lo > hi; }
  bool contains(std::uint32_t x) const { return lo <= x && x <= hi; }
  std::uint32_t count() const { return empty() ? 0 : hi - lo + 1; }
  bool operator==(const IndexRange&) const = default;
};

/// One element of S_k(a,b,d) together with the index multiset i_1 ≤ ... ≤ i_m
/// that produced it.
struct GeoArithElement {
  BigInt value;
  std::vector<std::uint32_t> indices;
};

inline constexpr std::uint64_t kDefaultProductCap = std::uint64_t{1} << 22;

/// b·(a+i_1 d)···(a+i_m d) for m in m_range and every i in i_range, one
/// certificate per distinct value, sorted by value.
std::vector<GeoArithElement> geo_arith_elements(const BigInt& b, const BigInt& a,
                                                const BigInt& d, IndexRange m_range,
                                                IndexRange i_range,
                                                std::uint64_t cap = kDefaultProductCap);

BigInt expand(const BigInt& b, const BigInt& a, const BigInt& d,
              const std::vector<std::uint32_t>& indices);

/// S_k(a,b,d) with m, i ∈ {0..k}; include_empty_product=false drops m = 0.
std::vector<BigInt> geo_arith_set(const BigInt& a, const BigInt& b, const BigInt& d,
                                  std::uint32_t k, bool include_empty_product = true);

/// S_K(A,D) = S_K(A,1,D).
std::vector<BigInt> s_grid(const BigInt& A, const BigInt& D, std::uint32_t K,
                           bool include_empty_product = true);

/// {(A+iD)^j : i ∈ i_range, j ∈ j_range}, sorted and deduplicated.
std::vector<BigInt> power_grid(const BigInt& A, const BigInt& D, IndexRange i_range,
                               IndexRange j_range);
std::vector<BigInt> power_grid(const BigInt& A, const BigInt& D, std::uint32_t K);

/// {b(a+id)^j : i ∈ i_range, j ∈ j_range}, sorted and deduplicated.
std::vector<BigInt> bad_pattern_set(const BigInt& b, const BigInt& a, const BigInt& d,
                                    IndexRange i_range, IndexRange j_range);

}  // namespace hjx
