#include <random>

#include "doctest.h"
#include "hjx/configurations.hpp"
#include "hjx/error.hpp"
#include "oracles.hpp"

using namespace hjx;

namespace {

LocatedWord W(const char* text) { return LocatedWord::parse(text); }

std::vector<BigInt> ints(std::initializer_list<int> xs) {
  std::vector<BigInt> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

std::vector<BigInt> sorted(const std::set<BigInt>& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_SUITE("configurations") {

TEST_CASE("combinatorial lines") {
  auto line = combinatorial_line(W("{}"), {1}, Alphabet(2));
  CHECK(line == std::vector{W("{1:0}"), W("{1:1}")});
  line = combinatorial_line(W("{2:1}"), {1, 3}, Alphabet(2));
  CHECK(line == std::vector{W("{1:0,2:1,3:0}"), W("{1:1,2:1,3:1}")});
  CHECK_THROWS_AS(combinatorial_line(W("{1:0}"), {1}, Alphabet(2)), OverlappingDomains);
  CHECK_THROWS_AS(combinatorial_line(W("{1:0}"), {}, Alphabet(2)), InvalidArgument);
}

TEST_CASE("extended line points") {
  const auto line = ExtendedLine::make(W("{}"), {1}, {2, 3}, Alphabet(2));
  CHECK(extended_line_points(line) ==
        std::vector{W("{1:0,2:0}"), W("{1:0,3:0}"), W("{1:1,2:1}"), W("{1:1,3:1}")});
  CHECK_THROWS_AS(ExtendedLine::make(W("{2:0}"), {1}, {2, 3}, Alphabet(2)), OverlappingDomains);
  CHECK_THROWS_AS(ExtendedLine::make(W("{}"), {1}, {1, 3}, Alphabet(2)), OverlappingDomains);
  CHECK_THROWS_AS(ExtendedLine::make(W("{}"), {1}, {3}, Alphabet(2)), InvalidArgument);
  CHECK_THROWS_AS(ExtendedLine::make(W("{4:v}"), {1}, {2, 3}, Alphabet(2)), InvalidArgument);
}

TEST_CASE("random lines have sigma times |F| points and the two slice shapes") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t sigma = 1 + rng() % 3;
    const std::uint32_t n = 3 + rng() % 6;
    std::vector<Position> perm(n);
    for (Position p = 1; p <= n; ++p) perm[p - 1] = p;
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t f_size = 2 + rng() % (n - 2);
    const std::size_t g_size = 1 + rng() % (n - f_size);
    PositionSet f(perm.begin(), perm.begin() + f_size);
    PositionSet gamma(perm.begin() + f_size, perm.begin() + f_size + g_size);
    std::vector<Entry> alpha;
    for (std::size_t i = f_size + g_size; i < n; ++i) {
      if (rng() % 2) alpha.push_back({perm[i], Symbol(static_cast<std::uint32_t>(rng() % sigma))});
    }
    std::sort(f.begin(), f.end());
    std::sort(gamma.begin(), gamma.end());
    const auto line = ExtendedLine::make(LocatedWord::from_entries(alpha), gamma, f, Alphabet(sigma));
    const auto points = extended_line_points(line);
    CHECK(points.size() == sigma * f.size());
    for (Position t : f) {
      PositionSet moving = gamma;
      moving.push_back(t);
      std::sort(moving.begin(), moving.end());
      std::vector<LocatedWord> slice;
      for (std::uint32_t s = 0; s < sigma; ++s) slice.push_back(line.point(Symbol(s), t));
      CHECK(slice == combinatorial_line(line.alpha(), moving, Alphabet(sigma)));
    }
    for (std::uint32_t s = 0; s < sigma; ++s) {
      for (Position t : f) {
        for (Position u : f) {
          const auto a = line.point(Symbol(s), t).domain();
          const auto b = line.point(Symbol(s), u).domain();
          std::vector<Position> diff;
          std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                        std::back_inserter(diff));
          CHECK(diff.size() == (t == u ? 0u : 2u));
        }
      }
    }
  }
}

TEST_CASE("line enumeration examples") {
  auto family = ConfigFamily::list({{2, 3}}, 3);
  auto lines = enumerate_extended_lines(3, Alphabet(1), family);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].gamma() == PositionSet{1});
  CHECK(lines[0].alpha().empty());
  CHECK(enumerate_extended_lines(2, Alphabet(2), ConfigFamily::list({{1, 2}}, 2)).empty());
  CHECK_THROWS_AS(enumerate_extended_lines(3, Alphabet(2), ConfigFamily::arithmetic(1, 4)),
                  InvalidArgument);
  CHECK_THROWS_AS(enumerate_extended_lines(6, Alphabet(2), ConfigFamily::arithmetic(1, 6), 100),
                  ResourceLimit);
}

TEST_CASE("line count N=4 sigma=2 AP(1)") {
  const auto mine = enumerate_extended_lines(4, Alphabet(2), ConfigFamily::arithmetic(1, 4));
  const auto theirs = oracle::extended_lines(4, 2, oracle::arithmetic_subsets(1, 4));
  CHECK(theirs.size() == 42);
  CHECK(mine.size() == theirs.size());
}

TEST_CASE("extended lines match the brute-force generator") {
  struct Case {
    std::uint32_t n, sigma, k;
  };
  for (auto [n, sigma, k] : {Case{3, 1, 1}, Case{3, 2, 1}, Case{4, 2, 1}, Case{4, 3, 1},
                             Case{5, 2, 2}, Case{5, 1, 1}, Case{5, 2, 1}}) {
    CAPTURE(n);
    CAPTURE(sigma);
    CAPTURE(k);
    const auto lines = enumerate_extended_lines(n, Alphabet(sigma), ConfigFamily::arithmetic(k, n));
    REQUIRE(std::is_sorted(lines.begin(), lines.end()));
    std::multiset<std::vector<LocatedWord>> mine, theirs;
    for (const auto& l : lines) mine.insert(extended_line_points(l));
    for (const auto& pts : oracle::extended_lines(n, sigma, oracle::arithmetic_subsets(k, n))) {
      std::vector<LocatedWord> words;
      for (const auto& m : pts) words.push_back(oracle::to_word(m, sigma));
      theirs.insert(words);
    }
    CHECK(mine == theirs);
  }
}

TEST_CASE("plain lines match the brute-force generator") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t sigma = 1; sigma <= 3; ++sigma) {
      std::multiset<std::vector<LocatedWord>> mine, theirs;
      for_each_plain_line(n, Alphabet(sigma), [&](const PlainLine& l) {
        mine.insert(combinatorial_line(l.alpha, l.gamma, Alphabet(sigma)));
        return true;
      });
      for (const auto& pts : oracle::plain_lines(n, sigma)) {
        std::vector<LocatedWord> words;
        for (const auto& m : pts) words.push_back(oracle::to_word(m, sigma));
        theirs.insert(words);
      }
      CHECK(mine == theirs);
    }
  }
}

TEST_CASE("arithmetic families") {
  CHECK(ap_family(1, 3).members() == std::vector<PositionSet>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(ap_family(2, 5).members() ==
        std::vector<PositionSet>{{1, 2, 3}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}});
  CHECK_THROWS_AS(ap_family(2, 2), WindowTooSmall);
  CHECK_THROWS_AS(ap_family(0, 2), InvalidArgument);
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint32_t n = k + 1; n <= 12; ++n) {
      auto expected = oracle::arithmetic_subsets(k, n);
      std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
        return compare_sets(a, b) < 0;
      });
      const auto family = ap_family(k, n);
      CHECK(family.members() == expected);
      for (const auto& s : oracle::subsets(n)) {
        CHECK(family.contains(s) == std::binary_search(expected.begin(), expected.end(), s,
                                                       [](const auto& a, const auto& b) {
                                                         return compare_sets(a, b) < 0;
                                                       }));
      }
    }
  }
  CHECK(ConfigFamily::arithmetic(2, 5).at_window(2).members().empty());
  CHECK(ConfigFamily::list({{1, 2}, {3, 5}}, 5).at_window(4).members() ==
        std::vector<PositionSet>{{1, 2}});
  CHECK_THROWS_AS(ConfigFamily::list({{1}}, 3), InvalidArgument);
  CHECK_THROWS_AS(ConfigFamily::list({{1, 4}}, 3), InvalidArgument);
}

TEST_CASE("geo-arithmetic sets") {
  CHECK(geo_arith_set(1, 2, 1, 1) == ints({2, 4}));
  CHECK(geo_arith_set(1, 1, 1, 2) == ints({1, 2, 3, 4, 6, 9}));
  const auto s = geo_arith_set(7, 1, 3, 2);
  CHECK(std::binary_search(s.begin(), s.end(), BigInt(1)));
  CHECK(std::binary_search(s.begin(), s.end(), BigInt(7)));
  CHECK(s_grid(2, 1, 1) == ints({1, 2, 3}));
  // m ≤ 1 gives only 1 and the factors 1, 2.
  CHECK(s_grid(1, 1, 1) == ints({1, 2}));
  for (std::uint32_t K = 1; K <= 4; ++K) {
    const auto g = s_grid(3, 2, K);
    for (std::uint32_t i = 0; i <= K; ++i) {
      CHECK(std::binary_search(g.begin(), g.end(), BigInt(3 + 2 * i)));
    }
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const BigInt a = 1 + rng() % 6, b = 1 + rng() % 6, d = 1 + rng() % 6;
    const std::uint32_t k = 1 + rng() % 4;
    CHECK(geo_arith_set(a, b, d, k) == sorted(oracle::geo_arith(a, b, d, k)));
    CHECK(geo_arith_set(a, b, d, k, false) == sorted(oracle::geo_arith(a, b, d, k, false)));
  }
  for (const auto& e : geo_arith_elements(2, 3, 5, IndexRange::zero_to(3), IndexRange::zero_to(3))) {
    CHECK(e.indices.size() <= 3);
    CHECK(std::is_sorted(e.indices.begin(), e.indices.end()));
    CHECK(expand(2, 3, 5, e.indices) == e.value);
  }
}

TEST_CASE("power grids and patterns") {
  CHECK(power_grid(1, 1, 2) == ints({1, 2, 3, 4, 9}));
  CHECK(power_grid(2, 3, 1) == ints({1, 2, 5}));
  CHECK(bad_pattern_set(1, 1, 1, IndexRange::zero_to(2), IndexRange::zero_to(1)) ==
        ints({1, 2, 3}));
  CHECK(bad_pattern_set(5, 2, 3, IndexRange::zero_to(4), {0, 0}) == ints({5}));
  CHECK(bad_pattern_set(2, 1, 2, IndexRange::zero_to(1), IndexRange::zero_to(1)) == ints({2, 6}));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const BigInt b = 1 + rng() % 5, a = 1 + rng() % 5, d = 1 + rng() % 5;
    const std::uint32_t ih = rng() % 4, jh = rng() % 4;
    const std::uint32_t il = rng() % (ih + 1), jl = rng() % (jh + 1);
    CHECK(bad_pattern_set(b, a, d, {il, ih}, {jl, jh}) ==
          sorted(oracle::pattern(b, a, d, il, ih, jl, jh)));
    CHECK(power_grid(a, d, {il, ih}, {jl, jh}) == sorted(oracle::pattern(1, a, d, il, ih, jl, jh)));
  }
}

}  // TEST_SUITE
