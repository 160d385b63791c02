#include "pedfuse/graph.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace pedfuse {

DenseGraph::DenseGraph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) {
    throw std::invalid_argument("DenseGraph: negative vertex count");
  }
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void DenseGraph::add_edge(int u, int v) {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_);
  if (u == v) {
    return;  // no self-edges
  }
  word(u, v / 64) |= std::uint64_t{1} << (v % 64);
  word(v, u / 64) |= std::uint64_t{1} << (u % 64);
}

bool DenseGraph::has_edge(int u, int v) const {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_);
  return (word(u, v / 64) >> (v % 64)) & 1;
}

int DenseGraph::degree(int v) const {
  int total = 0;
  for (int w = 0; w < words_; ++w) {
    total += std::popcount(word(v, w));
  }
  return total;
}

std::size_t DenseGraph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) {
    twice += static_cast<std::size_t>(degree(v));
  }
  return twice / 2;
}

std::vector<int> DenseGraph::neighbors(int v) const {
  std::vector<int> result;
  result.reserve(static_cast<std::size_t>(degree(v)));
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = word(v, w);
    while (bits != 0) {
      const int bit = std::countr_zero(bits);
      result.push_back(w * 64 + bit);
      bits &= bits - 1;
    }
  }
  return result;
}

std::vector<std::vector<int>> DenseGraph::adjacency_lists() const {
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) {
    lists[v] = neighbors(v);
  }
  return lists;
}

bool DenseGraph::row_intersects(int v, std::span<const std::uint64_t> mask) const {
  for (int w = 0; w < words_; ++w) {
    if (word(v, w) & mask[w]) {
      return true;
    }
  }
  return false;
}

DenseGraph DenseGraph::complement() const {
  DenseGraph c(n_);
  for (int v = 0; v < n_; ++v) {
    for (int w = 0; w < words_; ++w) {
      c.word(v, w) = ~word(v, w);
    }
    // Clear the self-bit and padding beyond n_.
    c.word(v, v / 64) &= ~(std::uint64_t{1} << (v % 64));
    const int tail = n_ % 64;
    if (tail != 0) {
      c.word(v, words_ - 1) &= (std::uint64_t{1} << tail) - 1;
    }
  }
  return c;
}

}  // namespace pedfuse
