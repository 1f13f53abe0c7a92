#include "hjx/grid_search.hpp"

#include <algorithm>

#include "hjx/error.hpp"

namespace hjx {

std::string grid_name(GridKind kind) { return kind == GridKind::Power ? "power" : "s"; }

GridKind parse_grid_kind(const std::string& name) {
  if (name == "power") return GridKind::Power;
  if (name == "s") return GridKind::SGrid;
  throw ParseError("grid must be 'power' or 's', got '" + name + "'");
}

std::vector<BigInt> make_grid(GridKind kind, const BigInt& A, const BigInt& D, std::uint32_t K) {
  if (K == 0) throw InvalidArgument("K must be positive");
  return kind == GridKind::Power ? power_grid(A, D, K) : s_grid(A, D, K);
}

namespace {

bool holds(const std::vector<BigInt>& sorted, const BigInt& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Calls visit(instance) for each (b, a, d) in the box whose pattern set lies
// inside `pool`; elements are produced lazily so misses are cut early.
template <typename Visit>
void scan_box(const std::vector<BigInt>& pool, const PatternSpec& p, Visit&& visit) {
  if (p.b.empty() || p.a.empty() || p.d.empty() || p.i_range.empty() || p.j_range.empty()) {
    return;
  }
  if (p.b.lo < 1 || p.a.lo < 1 || p.d.lo < 1) {
    throw InvalidArgument("pattern box ranges must be positive");
  }
  const bool zeroth_power = p.j_range.contains(0);
  std::vector<BigInt> instance;
  for (BigInt b = p.b.lo; b <= p.b.hi; ++b) {
    if (zeroth_power && !holds(pool, b)) continue;
    for (BigInt a = p.a.lo; a <= p.a.hi; ++a) {
      for (BigInt d = p.d.lo; d <= p.d.hi; ++d) {
        instance.clear();
        bool inside = true;
        for (std::uint32_t i = p.i_range.lo; inside && i <= p.i_range.hi; ++i) {
          const BigInt base = a + i * d;
          for (std::uint32_t j = p.j_range.lo; j <= p.j_range.hi; ++j) {
            BigInt x = b * pow(base, j);
            if (!holds(pool, x)) {
              inside = false;
              break;
            }
            instance.push_back(std::move(x));
          }
        }
        if (!inside) continue;
        std::sort(instance.begin(), instance.end());
        instance.erase(std::unique(instance.begin(), instance.end()), instance.end());
        visit(instance);
      }
    }
  }
}

}  // namespace

std::vector<std::vector<BigInt>> pattern_instances_in(const std::vector<BigInt>& pool,
                                                      const PatternSpec& pattern) {
  std::vector<BigInt> sorted = pool;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<BigInt>> found;
  scan_box(sorted, pattern, [&](const std::vector<BigInt>& inst) { found.push_back(inst); });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

bool verify_partition(const std::vector<std::vector<BigInt>>& cells, const PatternSpec& pattern) {
  std::vector<BigInt> all;
  for (const auto& cell : cells) all.insert(all.end(), cell.begin(), cell.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidArgument("partition cells overlap");
  }
  for (const auto& cell : cells) {
    std::vector<BigInt> sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    bool clean = true;
    scan_box(sorted, pattern, [&](const std::vector<BigInt>&) { clean = false; });
    if (!clean) return false;
  }
  return true;
}

std::optional<GridPartition> search_grid_partition(GridKind grid, std::uint32_t K,
                                                   const BigInt& A, const BigInt& D,
                                                   const PatternSpec& pattern, std::uint32_t r,
                                                   std::uint64_t cap) {
  if (r == 0) throw InvalidArgument("need at least one cell");
  const std::vector<BigInt> elements = make_grid(grid, A, D, K);

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (__builtin_mul_overflow(total, std::uint64_t{r}, &total) || total > cap) {
      throw ResourceLimit(std::to_string(r) + "^" + std::to_string(elements.size()) +
                          " partitions exceed the cap of " + std::to_string(cap));
    }
  }

  // Instances as index lists into the grid.
  std::vector<std::vector<std::size_t>> instances;
  for (const auto& inst : pattern_instances_in(elements, pattern)) {
    std::vector<std::size_t> idx;
    for (const BigInt& x : inst) {
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(elements.begin(), elements.end(), x) - elements.begin()));
    }
    instances.push_back(std::move(idx));
  }

  std::vector<std::uint32_t> cell(elements.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    const bool avoids = std::none_of(instances.begin(), instances.end(), [&](const auto& idx) {
      return std::all_of(idx.begin(), idx.end(),
                         [&](std::size_t e) { return cell[e] == cell[idx.front()]; });
    });
    if (avoids) {
      GridPartition found{grid, K, A, D, r, pattern, std::vector<std::vector<BigInt>>(r)};
      for (std::size_t e = 0; e < elements.size(); ++e) found.cells[cell[e]].push_back(elements[e]);
      return found;
    }
    // Odometer with the last element varying fastest.
    for (std::size_t e = elements.size(); e-- > 0;) {
      if (++cell[e] < r) break;
      cell[e] = 0;
    }
  }
  return std::nullopt;
}

std::optional<GridPartition> grid_counterexample_search(std::uint32_t K, const IntRange& A_range,
                                                        const IntRange& D_range,
                                                        const PatternSpec& pattern, GridKind grid,
                                                        std::uint32_t r, std::uint64_t cap) {
  if (A_range.lo < 1 || D_range.lo < 1) throw InvalidArgument("A and D must be positive");
  for (BigInt A = A_range.lo; A <= A_range.hi; ++A) {
    for (BigInt D = D_range.lo; D <= D_range.hi; ++D) {
      if (auto found = search_grid_partition(grid, K, A, D, pattern, r, cap)) return found;
    }
  }
  return std::nullopt;
}

}  // namespace hjx
