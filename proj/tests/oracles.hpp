#pragma once

// Brute-force reference implementations. None of these call into the
// library beyond its value types, so agreement with the library is evidence
// rather than tautology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hjx/bigint.hpp"
#include "hjx/words.hpp"

namespace oracle {

using hjx::BigInt;

// A word as a plain map, symbol indices 0..sigma-1 and sigma for v.
using MapWord = std::map<std::uint32_t, std::uint32_t>;

inline hjx::LocatedWord to_word(const MapWord& m, std::uint32_t sigma) {
  std::vector<hjx::Entry> entries;
  for (auto [p, s] : m) entries.push_back({p, s == sigma ? hjx::kVariable : hjx::Symbol(s)});
  return hjx::LocatedWord::from_entries(std::move(entries));
}

inline MapWord to_map(const hjx::LocatedWord& w, std::uint32_t sigma) {
  MapWord m;
  for (const auto& e : w.entries()) m[e.position] = e.symbol.is_variable() ? sigma : e.symbol.value();
  return m;
}

inline std::optional<MapWord> unite(const MapWord& a, const MapWord& b) {
  MapWord out = a;
  for (auto [p, s] : b) {
    if (!out.emplace(p, s).second) return std::nullopt;
  }
  return out;
}

// Canonical order written out directly: size, then the entry list.
inline bool canonical_less(const MapWord& a, const MapWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::vector<std::pair<std::uint32_t, std::uint32_t>>(a.begin(), a.end()) <
         std::vector<std::pair<std::uint32_t, std::uint32_t>>(b.begin(), b.end());
}

// All (symbols+1)^n partial maps, counted in base symbols+1 then sorted.
inline std::vector<MapWord> universe(std::uint32_t n, std::uint32_t symbols) {
  std::vector<MapWord> out;
  std::vector<std::uint32_t> digit(n, 0);
  while (true) {
    MapWord w;
    for (std::uint32_t p = 0; p < n; ++p) {
      if (digit[p] > 0) w[p + 1] = digit[p] - 1;
    }
    out.push_back(std::move(w));
    std::uint32_t p = 0;
    while (p < n && digit[p] == symbols) digit[p++] = 0;
    if (p == n) break;
    ++digit[p];
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

inline std::vector<std::vector<std::uint32_t>> subsets(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t p = 0; p < n; ++p) {
      if (mask >> p & 1) s.push_back(p + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<std::vector<std::uint32_t>> arithmetic_subsets(std::uint32_t k, std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& s : subsets(n)) {
    if (s.size() != k + 1) continue;
    bool ap = true;
    for (std::size_t i = 2; i < s.size(); ++i) ap = ap && s[i] - s[i - 1] == s[1] - s[0];
    if (ap) out.push_back(s);
  }
  return out;
}

// Point sets of every triple (α, γ, F) with F from members, all pairwise
// disjoint and γ nonempty. One entry per triple, points sorted canonically.
inline std::vector<std::vector<MapWord>> extended_lines(
    std::uint32_t n, std::uint32_t sigma, const std::vector<std::vector<std::uint32_t>>& members) {
  std::vector<std::vector<MapWord>> out;
  const auto all = subsets(n);
  for (const MapWord& alpha : universe(n, sigma)) {
    for (const auto& gamma : all) {
      if (gamma.empty()) continue;
      for (const auto& f : members) {
        std::set<std::uint32_t> used;
        for (auto [p, s] : alpha) used.insert(p);
        bool ok = true;
        for (auto p : gamma) ok = ok && used.insert(p).second;
        for (auto p : f) ok = ok && used.insert(p).second;
        if (!ok) continue;
        std::vector<MapWord> points;
        for (std::uint32_t t : f) {
          for (std::uint32_t s = 0; s < sigma; ++s) {
            MapWord w = alpha;
            for (auto p : gamma) w[p] = s;
            w[t] = s;
            points.push_back(std::move(w));
          }
        }
        std::sort(points.begin(), points.end(), canonical_less);
        out.push_back(std::move(points));
      }
    }
  }
  return out;
}

// Classical lines α ∪ γ×{s}.
inline std::vector<std::vector<MapWord>> plain_lines(std::uint32_t n, std::uint32_t sigma) {
  std::vector<std::vector<MapWord>> out;
  for (const MapWord& alpha : universe(n, sigma)) {
    for (const auto& gamma : subsets(n)) {
      if (gamma.empty()) continue;
      bool ok = true;
      for (auto p : gamma) ok = ok && !alpha.contains(p);
      if (!ok) continue;
      std::vector<MapWord> points;
      for (std::uint32_t s = 0; s < sigma; ++s) {
        MapWord w = alpha;
        for (auto p : gamma) w[p] = s;
        points.push_back(std::move(w));
      }
      std::sort(points.begin(), points.end(), canonical_less);
      out.push_back(std::move(points));
    }
  }
  return out;
}

inline BigInt ipow(BigInt b, std::uint32_t e) {
  BigInt r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// S_k(a,b,d) over every ordered index sequence (not multisets).
inline std::set<BigInt> geo_arith(const BigInt& a, const BigInt& b, const BigInt& d,
                                  std::uint32_t k, bool with_empty = true) {
  std::set<BigInt> out;
  if (with_empty) out.insert(b);
  for (std::uint32_t m = 1; m <= k; ++m) {
    std::vector<std::uint32_t> idx(m, 0);
    while (true) {
      BigInt v = b;
      for (auto i : idx) v *= a + i * d;
      out.insert(v);
      std::uint32_t p = 0;
      while (p < m && idx[p] == k) idx[p++] = 0;
      if (p == m) break;
      ++idx[p];
    }
  }
  return out;
}

inline std::set<BigInt> pattern(const BigInt& b, const BigInt& a, const BigInt& d,
                                std::uint32_t i_lo, std::uint32_t i_hi, std::uint32_t j_lo,
                                std::uint32_t j_hi) {
  std::set<BigInt> out;
  for (std::uint32_t i = i_lo; i <= i_hi; ++i) {
    for (std::uint32_t j = j_lo; j <= j_hi; ++j) out.insert(b * ipow(a + i * d, j));
  }
  return out;
}

// Scans every integer candidate and asks, by definition, whether some a − n
// hits it.
inline bool pws(const std::vector<std::int64_t>& members, std::uint32_t r, std::uint32_t length) {
  if (members.empty()) return false;
  const auto [lo, hi] = std::minmax_element(members.begin(), members.end());
  std::uint32_t run = 0;
  for (std::int64_t x = *lo - static_cast<std::int64_t>(r); x <= *hi; ++x) {
    bool hit = false;
    for (std::int64_t a : members) {
      for (std::uint32_t n = 1; n <= r; ++n) hit = hit || a - static_cast<std::int64_t>(n) == x;
    }
    run = hit ? run + 1 : 0;
    if (run >= length) return true;
  }
  return false;
}

using Clauses = std::vector<std::vector<std::int32_t>>;

// Every assignment of up to 20 variables. Returns a model (index 0 unused).
inline std::optional<std::vector<bool>> brute_force_sat(std::uint32_t vars, const Clauses& clauses) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars); ++bits) {
    bool all = true;
    for (const auto& c : clauses) {
      bool sat = false;
      for (auto lit : c) {
        const bool value = bits >> (std::abs(lit) - 1) & 1;
        sat = sat || (lit > 0) == value;
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) {
      std::vector<bool> model(vars + 1, false);
      for (std::uint32_t v = 1; v <= vars; ++v) model[v] = bits >> (v - 1) & 1;
      return model;
    }
  }
  return std::nullopt;
}

// Clause learning with per-clause true/false counters over full occurrence
// lists, activity-ordered decisions, false polarity first, restarts after
// 64·luby(i) conflicts.
class CounterSolver {
 public:
  CounterSolver(std::uint32_t vars, const Clauses& clauses)
      : vars_(vars), occ_(2 * (vars + 1)), val_(vars + 1, 0), level_(vars + 1, 0),
        reason_(vars + 1, -1), activity_(vars + 1, 0.0) {
    for (const auto& c : clauses) {
      if (c.empty()) empty_clause_ = true;
      add(c);
    }
  }

  std::optional<std::vector<bool>> solve() {
    if (empty_clause_) return std::nullopt;
    for (std::size_t c = 0; c < cls_.size(); ++c) check(static_cast<int>(c));
    std::uint64_t restarts = 0;
    std::uint64_t budget = 64;
    while (true) {
      const int conflict = propagate();
      if (conflict >= 0) {
        if (decisions_.empty()) return std::nullopt;
        learn(conflict);
        if (--budget == 0) {
          budget = 64 * luby(++restarts);
          undo_to(0);
        }
        continue;
      }
      int best = 0;
      for (std::uint32_t v = 1; v <= vars_; ++v) {
        if (val_[v] == 0 && (best == 0 || activity_[v] > activity_[best])) best = static_cast<int>(v);
      }
      if (best == 0) break;
      decisions_.push_back(trail_.size());
      assign(-best, -1);
    }
    std::vector<bool> model(vars_ + 1, false);
    for (std::uint32_t v = 1; v <= vars_; ++v) model[v] = val_[v] > 0;
    return model;
  }

 private:
  // 1, 1, 2, 1, 1, 2, 4, ...
  static std::uint64_t luby(std::uint64_t i) {
    std::uint64_t size = 1;
    std::uint64_t seq = 0;
    for (; size < i + 1; size = 2 * size + 1) ++seq;
    for (; size - 1 != i; --seq) {
      size = (size - 1) >> 1;
      i %= size;
    }
    return std::uint64_t{1} << seq;
  }

  std::size_t code(int lit) const { return 2 * static_cast<std::size_t>(std::abs(lit)) + (lit < 0); }
  int value(int lit) const { return lit > 0 ? val_[lit] : -val_[-lit]; }

  int add(std::vector<std::int32_t> c) {
    const int id = static_cast<int>(cls_.size());
    int t = 0;
    int f = 0;
    for (auto lit : c) {
      occ_[code(lit)].push_back(id);
      if (value(lit) > 0) ++t;
      if (value(lit) < 0) ++f;
    }
    cls_.push_back(std::move(c));
    true_.push_back(t);
    false_.push_back(f);
    return id;
  }

  void check(int c) {
    if (true_[c] > 0) return;
    const auto size = static_cast<int>(cls_[c].size());
    if (false_[c] == size) conflict_ = c;
    if (false_[c] == size - 1) units_.push_back(c);
  }

  void assign(int lit, int reason) {
    const int v = std::abs(lit);
    val_[v] = lit > 0 ? 1 : -1;
    level_[v] = static_cast<int>(decisions_.size());
    reason_[v] = reason;
    trail_.push_back(lit);
    for (int c : occ_[code(lit)]) ++true_[c];
    for (int c : occ_[code(-lit)]) {
      ++false_[c];
      check(c);
    }
  }

  int propagate() {
    while (conflict_ < 0 && !units_.empty()) {
      const int c = units_.back();
      units_.pop_back();
      if (true_[c] > 0 || false_[c] != static_cast<int>(cls_[c].size()) - 1) continue;
      for (auto lit : cls_[c]) {
        if (value(lit) == 0) {
          assign(lit, c);
          break;
        }
      }
    }
    const int c = conflict_;
    conflict_ = -1;
    units_.clear();
    return c;
  }

  void undo_to(std::size_t level) {
    while (decisions_.size() > level) {
      const std::size_t mark = decisions_.back();
      decisions_.pop_back();
      while (trail_.size() > mark) {
        const int lit = trail_.back();
        trail_.pop_back();
        for (int c : occ_[code(lit)]) --true_[c];
        for (int c : occ_[code(-lit)]) --false_[c];
        val_[std::abs(lit)] = 0;
        reason_[std::abs(lit)] = -1;
      }
    }
  }

  void learn(int conflict) {
    const int current = static_cast<int>(decisions_.size());
    std::vector<bool> seen(vars_ + 1, false);
    std::vector<std::int32_t> learnt;
    int open = 0;
    std::size_t index = trail_.size();
    int clause = conflict;
    int uip = 0;
    while (true) {
      for (auto lit : cls_[clause]) {
        const int v = std::abs(lit);
        if (v == uip || seen[v] || level_[v] == 0) continue;
        seen[v] = true;
        activity_[v] += bump_;
        if (level_[v] == current) {
          ++open;
        } else {
          learnt.push_back(lit);
        }
      }
      while (!seen[std::abs(trail_[--index])]) {
      }
      uip = std::abs(trail_[index]);
      seen[uip] = false;
      if (--open == 0) break;
      clause = reason_[uip];
    }
    const int asserting = -trail_[index];
    int back = 0;
    for (auto lit : learnt) back = std::max(back, level_[std::abs(lit)]);
    bump_ *= 1.05;
    undo_to(static_cast<std::size_t>(back));
    learnt.push_back(asserting);
    const int id = add(learnt);
    assign(asserting, id);
  }

  std::uint32_t vars_;
  bool empty_clause_ = false;
  Clauses cls_;
  std::vector<int> true_;
  std::vector<int> false_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> val_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<double> activity_;
  double bump_ = 1.0;
  std::vector<int> trail_;
  std::vector<std::size_t> decisions_;
  std::vector<int> units_;
  int conflict_ = -1;
};

// Splits clauses into groups with no variable in common; the formula is
// satisfiable iff every group is.
inline std::vector<Clauses> split_components(std::uint32_t vars, const Clauses& clauses) {
  std::vector<std::uint32_t> parent(vars + 1);
  for (std::uint32_t v = 0; v <= vars; ++v) parent[v] = v;
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& c : clauses) {
    for (auto lit : c) parent[find(std::abs(lit))] = find(std::abs(c.front()));
  }
  std::map<std::uint32_t, Clauses> groups;
  for (const auto& c : clauses) groups[c.empty() ? 0 : find(std::abs(c.front()))].push_back(c);
  std::vector<Clauses> out;
  for (auto& [root, group] : groups) out.push_back(std::move(group));
  return out;
}

// CounterSolver over each component; satisfiable iff all are.
inline bool counter_satisfiable(std::uint32_t vars, const Clauses& clauses) {
  for (auto& group : split_components(vars, clauses)) {
    std::map<std::int32_t, std::int32_t> renumber;
    for (auto& c : group) {
      for (auto& lit : c) {
        const auto next = static_cast<std::int32_t>(renumber.size()) + 1;
        const auto v = renumber.emplace(std::abs(lit), next).first->second;
        lit = lit > 0 ? v : -v;
      }
    }
    if (!CounterSolver(static_cast<std::uint32_t>(renumber.size()), group).solve()) return false;
  }
  return true;
}

}  // namespace oracle
