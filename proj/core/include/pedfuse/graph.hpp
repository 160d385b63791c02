#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pedfuse {

/// Simple undirected graph over vertices 0..n-1 with dense bit-set adjacency.
/// Sized for per-frame fusion instances (~10^2 vertices).
class DenseGraph {
 public:
  DenseGraph() = default;
  explicit DenseGraph(int n);

  int size() const { return n_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::size_t edge_count() const;

  /// Neighbors of v in ascending order.
  std::vector<int> neighbors(int v) const;

  /// All adjacency lists at once; cheaper than n neighbors() calls.
  std::vector<std::vector<int>> adjacency_lists() const;

  /// True when v has a neighbor whose bit is set in `mask` (one bit per
  /// vertex, same word layout as a row).
  bool row_intersects(int v, std::span<const std::uint64_t> mask) const;

  int words_per_row() const { return words_; }

  /// Complement graph (no self-loops).
  DenseGraph complement() const;

 private:
  std::uint64_t& word(int v, int w) { return bits_[static_cast<std::size_t>(v) * words_ + w]; }
  const std::uint64_t& word(int v, int w) const {
    return bits_[static_cast<std::size_t>(v) * words_ + w];
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace pedfuse
