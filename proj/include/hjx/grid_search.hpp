#pragma once

// Two-cell (or r-cell) partitions of power grids {(A+iD)^j} and of S_K(A,D)
// in which no cell holds a whole pattern {b(a+id)^j}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hjx/bigint.hpp"
#include "hjx/configurations.hpp"

namespace hjx {

/// Inclusive range of positive integers; empty when lo > hi.
struct IntRange {
  BigInt lo = 1;
  BigInt hi = 0;

  bool empty() const { return lo > hi; }
  bool operator==(const IntRange&) const = default;
};

/// The shape {b(a+id)^j : i ∈ i_range, j ∈ j_range} together with the finite
/// box of (b, a, d) in which instances are sought.
struct PatternSpec {
  IndexRange i_range = IndexRange::zero_to(2);
  IndexRange j_range = IndexRange::zero_to(1);
  IntRange b;
  IntRange a;
  IntRange d;

  bool operator==(const PatternSpec&) const = default;
};

enum class GridKind { Power, SGrid };

std::string grid_name(GridKind kind);
GridKind parse_grid_kind(const std::string& name);

/// power_grid(A, D, K) or s_grid(A, D, K).
std::vector<BigInt> make_grid(GridKind kind, const BigInt& A, const BigInt& D, std::uint32_t K);

/// Every distinct pattern instance from the box that lies inside `pool`
/// (sorted).
std::vector<std::vector<BigInt>> pattern_instances_in(const std::vector<BigInt>& pool,
                                                      const PatternSpec& pattern);

/// True iff no cell contains an instance of the pattern from the box.
/// Throws InvalidArgument when two cells share an element.
bool verify_partition(const std::vector<std::vector<BigInt>>& cells, const PatternSpec& pattern);

struct GridPartition {
  GridKind grid = GridKind::Power;
  std::uint32_t K = 1;
  BigInt A;
  BigInt D;
  std::uint32_t r = 2;
  PatternSpec pattern;
  std::vector<std::vector<BigInt>> cells;  // r cells, each sorted

  bool operator==(const GridPartition&) const = default;
};

inline constexpr std::uint64_t kDefaultPartitionCap = std::uint64_t{1} << 24;

/// Exhaustive scan of the r^|grid| cell assignments of one grid, in
/// lexicographic order of the assignment vector over the sorted grid.
/// Throws ResourceLimit when r^|grid| exceeds cap.
std::optional<GridPartition> search_grid_partition(GridKind grid, std::uint32_t K,
                                                   const BigInt& A, const BigInt& D,
                                                   const PatternSpec& pattern, std::uint32_t r,
                                                   std::uint64_t cap = kDefaultPartitionCap);

/// The first (A, D) in the ranges (A outer, D inner) whose grid admits an
/// avoiding partition, with that partition.
std::optional<GridPartition> grid_counterexample_search(
    std::uint32_t K, const IntRange& A_range, const IntRange& D_range, const PatternSpec& pattern,
    GridKind grid = GridKind::Power, std::uint32_t r = 2,
    std::uint64_t cap = kDefaultPartitionCap);

}  // namespace hjx
