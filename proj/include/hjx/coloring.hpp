#pragma once

#include <cstdint>
#include <vector>

namespace hjx {

/// Colors are 1..r.
using Color = std::uint32_t;

/// A total coloring of an N-universe, indexed by word rank.
struct Coloring {
  std::uint32_t num_colors = 1;
  std::vector<Color> colors;

  Color operator[](std::uint64_t rank) const { return colors[rank]; }
  std::uint64_t size() const { return colors.size(); }

  /// Throws InvalidArgument if any color lies outside 1..num_colors.
  void validate() const;

  bool operator==(const Coloring&) const = default;
};

}  // namespace hjx
