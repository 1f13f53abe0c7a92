#include "hjx/reductions.hpp"

#include <algorithm>

#include "hjx/error.hpp"

namespace hjx {

void Coloring::validate() const {
  if (num_colors == 0) throw InvalidArgument("a coloring needs at least one color");
  for (Color c : colors) {
    if (c < 1 || c > num_colors) {
      throw InvalidArgument("color " + std::to_string(c) + " outside 1.." +
                            std::to_string(num_colors));
    }
  }
}

ReductionKind ReductionKind::affine(BigInt A, BigInt D) {
  if (A < 1 || D < 1) throw InvalidArgument("affine reduction needs A, D >= 1");
  return ReductionKind(Affine{std::move(A), std::move(D)});
}

std::string ReductionKind::name() const {
  if (is_additive()) return "additive";
  if (is_multiplicative()) return "multiplicative";
  return "affine";
}

namespace {

// The integer a position contributes: t itself, or A+tD.
BigInt factor_of(const ReductionKind& kind, const BigInt& t) {
  if (const auto* affine = kind.affine_params()) return affine->A + t * affine->D;
  return t;
}

BigInt product_over(const ReductionKind& kind, const PositionSet& positions) {
  BigInt p = 1;
  for (Position t : positions) p *= factor_of(kind, t);
  return p;
}

}  // namespace

BigInt reduce(const ReductionKind& kind, const LocatedWord& w) {
  if (!w.is_constant()) {
    throw VariableInConstantReduction(w.to_string() + " contains the variable");
  }
  if (kind.is_additive()) {
    BigInt sum = 1;
    for (const Entry& e : w.entries()) sum += e.symbol.value();
    return sum;
  }
  BigInt product = 1;
  for (const Entry& e : w.entries()) {
    product *= pow(factor_of(kind, e.position), e.symbol.value());
  }
  return product;
}

DerivedTriple derived_params(const ReductionKind& kind, const LocatedWord& alpha,
                             const PositionSet& gamma, const BigInt& a, const BigInt& d) {
  if (kind.is_additive()) {
    throw UnsupportedKind("the additive reduction has no (b, a, d) triple; use additive_params");
  }
  if (a < 1 || d < 1) throw InvalidArgument("a and d must be positive");
  if (!disjoint(alpha.domain(), gamma)) {
    throw OverlappingDomains("dom α meets γ");
  }
  const BigInt moving = product_over(kind, gamma);
  DerivedTriple triple;
  triple.b_bar = reduce(kind, alpha);
  triple.a_bar = factor_of(kind, a) * moving;
  if (const auto* affine = kind.affine_params()) {
    triple.d_bar = d * affine->D * moving;
  } else {
    triple.d_bar = d * moving;
  }
  return triple;
}

AdditivePair additive_params(const LocatedWord& alpha, const PositionSet& gamma) {
  return {reduce(ReductionKind::additive(), alpha), BigInt(gamma.size())};
}

bool identity_check(const ReductionKind& kind, const LocatedWord& alpha,
                    const PositionSet& gamma, std::uint32_t a, std::uint32_t d, std::uint32_t i,
                    std::uint32_t j) {
  if (kind.is_additive()) {
    const LocatedWord word = combine(alpha, LocatedWord::constant_on(gamma, Symbol(i)));
    const AdditivePair pair = additive_params(alpha, gamma);
    return reduce(kind, word) == pair.a + i * pair.d;
  }
  const Position t = a + i * d;
  PositionSet moving = gamma;
  moving.push_back(t);
  moving = make_position_set(std::move(moving));
  if (moving.size() != gamma.size() + 1) {
    throw UndefinedProduct("a+id lies in γ");
  }
  const LocatedWord word = combine(alpha, LocatedWord::constant_on(moving, Symbol(j)));
  const DerivedTriple triple = derived_params(kind, alpha, gamma, a, d);
  return reduce(kind, word) == triple.b_bar * pow(triple.a_bar + i * triple.d_bar, j);
}

// --- base colorings -------------------------------------------------------------

BaseColoring BaseColoring::residues(std::uint32_t q, std::vector<Color> colors) {
  if (q == 0) throw InvalidArgument("modulus must be positive");
  if (colors.size() != q) {
    throw InvalidArgument("a residue rule mod " + std::to_string(q) + " needs " +
                          std::to_string(q) + " colors");
  }
  if (std::any_of(colors.begin(), colors.end(), [](Color c) { return c == 0; })) {
    throw InvalidArgument("colors start at 1");
  }
  BaseColoring base;
  base.modulus_ = q;
  base.residue_colors_ = std::move(colors);
  return base;
}

BaseColoring BaseColoring::explicit_map(std::map<BigInt, Color> colors) {
  for (const auto& [n, c] : colors) {
    if (n < 1) throw InvalidArgument("base colorings color positive integers");
    if (c == 0) throw InvalidArgument("colors start at 1");
  }
  BaseColoring base;
  base.map_ = std::move(colors);
  return base;
}

std::optional<Color> BaseColoring::color_of(const BigInt& n) const {
  if (modulus_ != 0) {
    return residue_colors_[static_cast<std::size_t>(BigInt(n % modulus_))];
  }
  auto it = map_.find(n);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t BaseColoring::num_colors() const {
  Color top = 1;
  for (Color c : residue_colors_) top = std::max(top, c);
  for (const auto& [n, c] : map_) top = std::max(top, c);
  return top;
}

Coloring pullback_coloring(const ReductionKind& kind, const BaseColoring& base, std::uint32_t n,
                           const Alphabet& alphabet, std::uint64_t cap) {
  if (alphabet.has_variable) throw InvalidArgument("pullbacks color constant words only");
  Coloring coloring;
  coloring.num_colors = base.num_colors();
  for (const LocatedWord& w : enumerate_universe(n, alphabet, cap)) {
    const BigInt image = reduce(kind, w);
    auto c = base.color_of(image);
    if (!c) {
      throw MissingBaseColor("no base color for " + to_decimal(image) + " = f(" +
                             w.to_string() + ")");
    }
    coloring.colors.push_back(*c);
  }
  return coloring;
}

}  // namespace hjx
