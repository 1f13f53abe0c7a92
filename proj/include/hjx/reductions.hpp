#pragma once

// Maps from constant located words to positive integers that carry line
// configurations to arithmetic and geo-arithmetic configurations:
//   additive        f(α) = 1 + Σ α(t)
//   multiplicative  f(α) = Π t^α(t)
//   affine(A, D)    f(α) = Π (A+tD)^α(t)

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hjx/bigint.hpp"
#include "hjx/coloring.hpp"
#include "hjx/words.hpp"

namespace hjx {

class ReductionKind {
 public:
  struct Additive {
    bool operator==(const Additive&) const = default;
  };
  struct Multiplicative {
    bool operator==(const Multiplicative&) const = default;
  };
  struct Affine {
    BigInt A;
    BigInt D;
    bool operator==(const Affine&) const = default;
  };

  static ReductionKind additive() { return ReductionKind(Additive{}); }
  static ReductionKind multiplicative() { return ReductionKind(Multiplicative{}); }
  /// Throws InvalidArgument unless A, D ≥ 1.
  static ReductionKind affine(BigInt A, BigInt D);

  bool is_additive() const { return std::holds_alternative<Additive>(variant_); }
  bool is_multiplicative() const { return std::holds_alternative<Multiplicative>(variant_); }
  const Affine* affine_params() const { return std::get_if<Affine>(&variant_); }

  /// "additive", "multiplicative" or "affine".
  std::string name() const;

  bool operator==(const ReductionKind&) const = default;

 private:
  using Variant = std::variant<Additive, Multiplicative, Affine>;
  explicit ReductionKind(Variant v) : variant_(std::move(v)) {}

  Variant variant_;
};

/// Throws VariableInConstantReduction when w contains v.
BigInt reduce(const ReductionKind& kind, const LocatedWord& w);

struct DerivedTriple {
  BigInt b_bar;
  BigInt a_bar;
  BigInt d_bar;

  bool operator==(const DerivedTriple&) const = default;
};

/// (b̄, ā, d̄) for the multiplicative and affine reductions:
///   multiplicative  b̄ = Π t^α(t),       ā = a·Π_γ t,            d̄ = d·Π_γ t
///   affine          b̄ = Π (A+tD)^α(t),  ā = (A+aD)·Π_γ (A+tD),  d̄ = dD·Π_γ (A+tD)
/// Throws UnsupportedKind for the additive reduction, OverlappingDomains
/// when dom α meets γ, InvalidArgument when a or d is zero.
DerivedTriple derived_params(const ReductionKind& kind, const LocatedWord& alpha,
                             const PositionSet& gamma, const BigInt& a, const BigInt& d);

/// The additive analogue: (f(α), |γ|).
struct AdditivePair {
  BigInt a;
  BigInt d;
};
AdditivePair additive_params(const LocatedWord& alpha, const PositionSet& gamma);

/// Evaluates both sides of the transport identity exactly:
///   additive:       f(α ∪ γ×{i}) = f(α) + i·|γ|
///   otherwise:      f(α ∪ (γ∪{a+id})×{j}) = b̄(ā + i·d̄)^j
/// Throws UndefinedProduct when the assembled word is not defined.
bool identity_check(const ReductionKind& kind, const LocatedWord& alpha,
                    const PositionSet& gamma, std::uint32_t a, std::uint32_t d, std::uint32_t i,
                    std::uint32_t j);

/// A coloring of positive integers: a residue rule n ↦ colors[n mod q] or an
/// explicit finite map.
class BaseColoring {
 public:
  static BaseColoring residues(std::uint32_t q, std::vector<Color> colors);
  static BaseColoring explicit_map(std::map<BigInt, Color> colors);

  std::optional<Color> color_of(const BigInt& n) const;
  std::uint32_t num_colors() const;

  bool is_residue_rule() const { return modulus_ != 0; }
  std::uint32_t modulus() const { return modulus_; }
  const std::vector<Color>& residue_colors() const { return residue_colors_; }
  const std::map<BigInt, Color>& map() const { return map_; }

 private:
  BaseColoring() = default;

  std::uint32_t modulus_ = 0;
  std::vector<Color> residue_colors_;
  std::map<BigInt, Color> map_;
};

/// Colors each constant word w of the N-universe by base(reduce(kind, w)).
/// Throws MissingBaseColor when base has no color for some image.
Coloring pullback_coloring(const ReductionKind& kind, const BaseColoring& base, std::uint32_t n,
                           const Alphabet& alphabet,
                           std::uint64_t cap = kDefaultUniverseCap);

}  // namespace hjx
