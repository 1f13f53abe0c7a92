#include "hjx/configurations.hpp"

#include <algorithm>
#include <map>

#include "hjx/error.hpp"

namespace hjx {

std::strong_ordering compare_sets(const PositionSet& a, const PositionSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// k-subsets of ground in lex order.
void for_each_subset_of_size(const PositionSet& ground, std::size_t k,
                             const std::function<bool(const PositionSet&)>& visit) {
  if (k > ground.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  PositionSet subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = ground[idx[i]];
    if (!visit(subset)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == ground.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

PositionSet complement(std::uint32_t n, const PositionSet& a, const PositionSet& b = {}) {
  PositionSet rest;
  for (Position p = 1; p <= n; ++p) {
    if (!std::binary_search(a.begin(), a.end(), p) && !std::binary_search(b.begin(), b.end(), p)) {
      rest.push_back(p);
    }
  }
  return rest;
}

// Constant words with domain inside `ground`, in canonical order.
std::vector<LocatedWord> words_on(const PositionSet& ground, const Alphabet& alphabet) {
  if (ground.empty()) return {LocatedWord()};
  Alphabet constants(alphabet.size);
  std::vector<LocatedWord> words;
  for (const LocatedWord& w :
       enumerate_universe(static_cast<std::uint32_t>(ground.size()), constants)) {
    std::vector<Entry> relabeled;
    for (const Entry& e : w.entries()) relabeled.push_back({ground[e.position - 1], e.symbol});
    words.push_back(LocatedWord::from_entries(std::move(relabeled)));
  }
  return words;
}

void require_positive(const BigInt& x, const char* name) {
  if (x < 1) throw InvalidArgument(std::string(name) + " must be a positive integer");
}

std::vector<BigInt> sorted_unique(std::vector<BigInt> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace

std::vector<PositionSet> nonempty_subsets(const PositionSet& ground) {
  std::vector<PositionSet> out;
  for (std::size_t k = 1; k <= ground.size(); ++k) {
    for_each_subset_of_size(ground, k, [&](const PositionSet& s) {
      out.push_back(s);
      return true;
    });
  }
  return out;
}

// --- ConfigFamily --------------------------------------------------------------

ConfigFamily ConfigFamily::arithmetic(std::uint32_t k, std::uint32_t window) {
  if (k == 0) throw InvalidArgument("AP(k) needs k >= 1: singletons are not allowed");
  if (window < k + 1) {
    throw WindowTooSmall("a " + std::to_string(k + 1) + "-term progression does not fit in [" +
                         std::to_string(window) + "]");
  }
  std::vector<PositionSet> members;
  for (std::uint32_t d = 1; 1 + k * d <= window; ++d) {
    for (std::uint32_t a = 1; a + k * d <= window; ++a) {
      PositionSet ap;
      for (std::uint32_t i = 0; i <= k; ++i) ap.push_back(a + i * d);
      members.push_back(std::move(ap));
    }
  }
  std::sort(members.begin(), members.end(),
            [](const PositionSet& x, const PositionSet& y) { return compare_sets(x, y) < 0; });
  return ConfigFamily(FamilyKind::ArithmeticProgressions, k, window, std::move(members));
}

ConfigFamily ConfigFamily::list(std::vector<PositionSet> members, std::uint32_t window) {
  for (PositionSet& m : members) {
    const std::size_t raw = m.size();
    m = make_position_set(std::move(m));
    if (m.size() != raw) throw InvalidArgument("family member lists a position twice");
    if (m.size() < 2) throw InvalidArgument("family members need at least two elements");
    if (m.back() > window) {
      throw InvalidArgument("family member exceeds window " + std::to_string(window));
    }
  }
  std::sort(members.begin(), members.end(),
            [](const PositionSet& x, const PositionSet& y) { return compare_sets(x, y) < 0; });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return ConfigFamily(FamilyKind::List, 0, window, std::move(members));
}

ConfigFamily ConfigFamily::plain(std::uint32_t window) {
  return ConfigFamily(FamilyKind::PlainLines, 0, window, {});
}

bool ConfigFamily::contains(const PositionSet& set) const {
  if (kind_ == FamilyKind::ArithmeticProgressions) {
    if (set.size() != k_ + 1 || set.back() > window_ || set.front() == 0) return false;
    const Position d = set[1] - set[0];
    for (std::size_t i = 1; i < set.size(); ++i) {
      if (set[i] <= set[i - 1] || set[i] - set[i - 1] != d) return false;
    }
    return true;
  }
  return std::binary_search(members_.begin(), members_.end(), set,
                            [](const PositionSet& x, const PositionSet& y) {
                              return compare_sets(x, y) < 0;
                            });
}

ConfigFamily ConfigFamily::at_window(std::uint32_t n) const {
  switch (kind_) {
    case FamilyKind::ArithmeticProgressions:
      if (n < k_ + 1) return ConfigFamily(kind_, k_, n, {});
      return arithmetic(k_, n);
    case FamilyKind::List: {
      std::vector<PositionSet> kept;
      for (const PositionSet& m : members_) {
        if (m.back() <= n) kept.push_back(m);
      }
      return ConfigFamily(kind_, 0, n, std::move(kept));
    }
    case FamilyKind::PlainLines:
      return plain(n);
  }
  return *this;
}

ConfigFamily ap_family(std::uint32_t k, std::uint32_t n) { return ConfigFamily::arithmetic(k, n); }

// --- lines ---------------------------------------------------------------------

std::vector<LocatedWord> combinatorial_line(const LocatedWord& alpha, const PositionSet& gamma,
                                            const Alphabet& alphabet) {
  if (gamma.empty()) throw InvalidArgument("a combinatorial line needs a nonempty moving set");
  if (!disjoint(alpha.domain(), gamma)) {
    throw OverlappingDomains("dom " + alpha.to_string() + " meets the moving set");
  }
  std::vector<LocatedWord> line;
  line.reserve(alphabet.size);
  for (std::uint32_t s = 0; s < alphabet.size; ++s) {
    line.push_back(combine(alpha, LocatedWord::constant_on(gamma, Symbol(s))));
  }
  return line;
}

ExtendedLine ExtendedLine::make(LocatedWord alpha, PositionSet gamma, PositionSet extensions,
                                Alphabet alphabet) {
  gamma = make_position_set(std::move(gamma));
  extensions = make_position_set(std::move(extensions));
  if (gamma.empty()) throw InvalidArgument("γ must be nonempty");
  if (extensions.size() < 2) throw InvalidArgument("F must have at least two elements");
  if (!alpha.is_constant() || !alpha.over(Alphabet(alphabet.size))) {
    throw InvalidArgument("α must be a constant word over the alphabet");
  }
  const PositionSet dom = alpha.domain();
  if (!disjoint(dom, gamma) || !disjoint(dom, extensions) || !disjoint(gamma, extensions)) {
    throw OverlappingDomains("dom α, γ and F must be pairwise disjoint");
  }
  ExtendedLine line;
  line.alpha_ = std::move(alpha);
  line.gamma_ = std::move(gamma);
  line.extensions_ = std::move(extensions);
  line.alphabet_ = alphabet;
  return line;
}

LocatedWord ExtendedLine::point(Symbol s, Position t) const {
  PositionSet moving = gamma_;
  moving.insert(std::upper_bound(moving.begin(), moving.end(), t), t);
  return combine(alpha_, LocatedWord::constant_on(moving, s));
}

std::strong_ordering ExtendedLine::operator<=>(const ExtendedLine& other) const {
  if (auto c = compare_sets(extensions_, other.extensions_); c != 0) return c;
  if (auto c = compare_sets(gamma_, other.gamma_); c != 0) return c;
  return alpha_ <=> other.alpha_;
}

std::vector<LocatedWord> extended_line_points(const ExtendedLine& line) {
  std::vector<LocatedWord> points;
  points.reserve(line.alphabet().size * line.extensions().size());
  for (std::uint32_t s = 0; s < line.alphabet().size; ++s) {
    for (Position t : line.extensions()) points.push_back(line.point(Symbol(s), t));
  }
  std::sort(points.begin(), points.end());
  return points;
}

void for_each_extended_line(std::uint32_t n, const Alphabet& alphabet,
                            const ConfigFamily& family,
                            const std::function<bool(const ExtendedLine&)>& visit) {
  if (family.kind() == FamilyKind::PlainLines) {
    throw InvalidArgument("plain-line families have no extended lines");
  }
  if (family.window() > n) {
    throw InvalidArgument("family window " + std::to_string(family.window()) +
                          " exceeds N=" + std::to_string(n));
  }
  for (const PositionSet& f : family.members()) {
    const PositionSet free = complement(n, f);
    for (const PositionSet& gamma : nonempty_subsets(free)) {
      for (const LocatedWord& alpha : words_on(complement(n, f, gamma), alphabet)) {
        if (!visit(ExtendedLine::make(alpha, gamma, f, alphabet))) return;
      }
    }
  }
}

std::vector<ExtendedLine> enumerate_extended_lines(std::uint32_t n, const Alphabet& alphabet,
                                                   const ConfigFamily& family,
                                                   std::uint64_t cap) {
  std::vector<ExtendedLine> lines;
  for_each_extended_line(n, alphabet, family, [&](const ExtendedLine& line) {
    if (lines.size() == cap) {
      throw ResourceLimit("more than " + std::to_string(cap) + " extended lines at N=" +
                          std::to_string(n));
    }
    lines.push_back(line);
    return true;
  });
  return lines;
}

void for_each_plain_line(std::uint32_t n, const Alphabet& alphabet,
                         const std::function<bool(const PlainLine&)>& visit) {
  for (const PositionSet& gamma : nonempty_subsets(complement(n, {}))) {
    for (const LocatedWord& alpha : words_on(complement(n, gamma), alphabet)) {
      if (!visit(PlainLine{alpha, gamma})) return;
    }
  }
}

// --- integer configurations ----------------------------------------------------

BigInt expand(const BigInt& b, const BigInt& a, const BigInt& d,
              const std::vector<std::uint32_t>& indices) {
  BigInt value = b;
  for (std::uint32_t i : indices) value *= a + i * d;
  return value;
}

std::vector<GeoArithElement> geo_arith_elements(const BigInt& b, const BigInt& a,
                                                const BigInt& d, IndexRange m_range,
                                                IndexRange i_range, std::uint64_t cap) {
  require_positive(b, "b");
  require_positive(a, "a");
  require_positive(d, "d");
  std::map<BigInt, std::vector<std::uint32_t>> found;
  if (m_range.empty()) return {};
  std::uint64_t visited = 0;

  std::vector<std::uint32_t> indices;
  // Non-decreasing index sequences of the requested length; the product is
  // commutative so multisets cover every (i_1, ..., i_m).
  auto extend = [&](auto&& self, std::uint32_t remaining, std::uint32_t lo,
                    const BigInt& partial) -> void {
    if (remaining == 0) {
      if (++visited > cap) {
        throw ResourceLimit("more than " + std::to_string(cap) + " products requested");
      }
      found.try_emplace(partial, indices);
      return;
    }
    for (std::uint32_t i = lo; i <= i_range.hi; ++i) {
      indices.push_back(i);
      self(self, remaining - 1, i, partial * (a + i * d));
      indices.pop_back();
    }
  };
  for (std::uint32_t m = m_range.lo; m <= m_range.hi; ++m) {
    if (m > 0 && i_range.empty()) continue;
    extend(extend, m, i_range.lo, b);
  }

  std::vector<GeoArithElement> out;
  out.reserve(found.size());
  for (auto& [value, idx] : found) out.push_back({value, std::move(idx)});
  return out;
}

std::vector<BigInt> geo_arith_set(const BigInt& a, const BigInt& b, const BigInt& d,
                                  std::uint32_t k, bool include_empty_product) {
  const IndexRange m_range{include_empty_product ? 0u : 1u, k};
  std::vector<BigInt> out;
  for (auto& e : geo_arith_elements(b, a, d, m_range, IndexRange::zero_to(k))) {
    out.push_back(std::move(e.value));
  }
  return out;
}

std::vector<BigInt> s_grid(const BigInt& A, const BigInt& D, std::uint32_t K,
                           bool include_empty_product) {
  return geo_arith_set(A, 1, D, K, include_empty_product);
}

std::vector<BigInt> power_grid(const BigInt& A, const BigInt& D, IndexRange i_range,
                               IndexRange j_range) {
  return bad_pattern_set(1, A, D, i_range, j_range);
}

std::vector<BigInt> power_grid(const BigInt& A, const BigInt& D, std::uint32_t K) {
  return power_grid(A, D, IndexRange::zero_to(K), IndexRange::zero_to(K));
}

std::vector<BigInt> bad_pattern_set(const BigInt& b, const BigInt& a, const BigInt& d,
                                    IndexRange i_range, IndexRange j_range) {
  require_positive(b, "b");
  require_positive(a, "a");
  require_positive(d, "d");
  std::vector<BigInt> out;
  if (i_range.empty() || j_range.empty()) return out;
  for (std::uint32_t i = i_range.lo; i <= i_range.hi; ++i) {
    const BigInt base = a + i * d;
    for (std::uint32_t j = j_range.lo; j <= j_range.hi; ++j) out.push_back(b * pow(base, j));
  }
  return sorted_unique(std::move(out));
}

}  // namespace hjx
