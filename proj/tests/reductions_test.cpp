#include <random>

#include "doctest.h"
#include "hjx/error.hpp"
#include "hjx/reductions.hpp"
#include "oracles.hpp"

using namespace hjx;

namespace {

LocatedWord W(const char* text) { return LocatedWord::parse(text); }

// f evaluated straight from the definitions.
BigInt direct(const ReductionKind& kind, const LocatedWord& w) {
  BigInt out = 1;
  for (const auto& e : w.entries()) {
    const BigInt t = e.position;
    const std::uint32_t s = e.symbol.value();
    if (kind.is_additive()) {
      out += s;
    } else if (kind.is_multiplicative()) {
      out *= oracle::ipow(t, s);
    } else {
      out *= oracle::ipow(kind.affine_params()->A + t * kind.affine_params()->D, s);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("reduce examples") {
  CHECK(reduce(ReductionKind::additive(), W("{}")) == 1);
  CHECK(reduce(ReductionKind::multiplicative(), W("{2:3}")) == 8);
  CHECK(reduce(ReductionKind::affine(1, 2), W("{1:1,2:1}")) == 15);
  CHECK_THROWS_AS(reduce(ReductionKind::additive(), W("{1:v}")), VariableInConstantReduction);
  CHECK_THROWS_AS(ReductionKind::affine(0, 1), InvalidArgument);
}

TEST_CASE("derived parameters") {
  CHECK(derived_params(ReductionKind::multiplicative(), W("{5:1}"), {3}, 1, 1) ==
        DerivedTriple{5, 3, 3});
  CHECK(derived_params(ReductionKind::affine(1, 1), W("{1:1}"), {2}, 3, 1) ==
        DerivedTriple{2, 12, 3});
  CHECK(derived_params(ReductionKind::multiplicative(), W("{}"), {}, 1, 1) ==
        DerivedTriple{1, 1, 1});
  CHECK_THROWS_AS(derived_params(ReductionKind::additive(), W("{}"), {1}, 1, 1), UnsupportedKind);
  CHECK_THROWS_AS(derived_params(ReductionKind::multiplicative(), W("{1:1}"), {1}, 1, 1),
                  OverlappingDomains);
}

TEST_CASE("identity examples") {
  CHECK(identity_check(ReductionKind::multiplicative(), W("{5:1}"), {3}, 1, 1, 1, 1));
  CHECK(reduce(ReductionKind::multiplicative(), W("{2:1,3:1,5:1}")) == 30);
  CHECK(identity_check(ReductionKind::additive(), W("{1:2}"), {2, 4}, 0, 0, 1, 0));
  CHECK(reduce(ReductionKind::additive(), W("{1:2,2:1,4:1}")) == 5);
}

TEST_CASE("homomorphism law on random pairs") {
  std::mt19937_64 rng(17);
  const ReductionKind kinds[] = {ReductionKind::additive(), ReductionKind::multiplicative(),
                                 ReductionKind::affine(3, 7)};
  int checked = 0;
  while (checked < 1000) {
    const std::uint32_t n = 1 + rng() % 10;
    std::vector<Entry> a, b;
    for (Position p = 1; p <= n; ++p) {
      const auto roll = rng() % 3;
      const Symbol s(static_cast<std::uint32_t>(rng() % 4));
      if (roll == 1) a.push_back({p, s});
      if (roll == 2) b.push_back({p, s});
    }
    const auto u = LocatedWord::from_entries(a), w = LocatedWord::from_entries(b);
    const auto uw = combine(u, w);
    for (const auto& kind : kinds) {
      CHECK(reduce(kind, uw) == direct(kind, uw));
      if (kind.is_additive()) {
        CHECK(reduce(kind, uw) == reduce(kind, u) + reduce(kind, w) - 1);
      } else {
        CHECK(reduce(kind, uw) == reduce(kind, u) * reduce(kind, w));
      }
    }
    ++checked;
  }
}

TEST_CASE("pullback colorings") {
  const auto parity = BaseColoring::residues(2, {1, 2});
  const auto c = pullback_coloring(ReductionKind::additive(), parity, 1, Alphabet(2));
  CHECK(c.colors == std::vector<Color>{*parity.color_of(1), *parity.color_of(1),
                                       *parity.color_of(2)});
  const auto constant = BaseColoring::residues(1, {3});
  for (Color x : pullback_coloring(ReductionKind::multiplicative(), constant, 3, Alphabet(3)).colors) {
    CHECK(x == 3);
  }
  std::map<BigInt, Color> odd;
  for (int n = 1; n < 100; n += 2) odd[n] = 1;
  CHECK_THROWS_AS(pullback_coloring(ReductionKind::multiplicative(), BaseColoring::explicit_map(odd),
                                    2, Alphabet(2)),
                  MissingBaseColor);
}

}  // TEST_SUITE
