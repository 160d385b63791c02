#include "pedfuse/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace pedfuse {

namespace {

void check_ordering(const DenseGraph& graph, const std::vector<int>& ordering) {
  if (static_cast<int>(ordering.size()) != graph.size()) {
    throw std::invalid_argument("ordering size does not match vertex count");
  }
  std::vector<char> seen(ordering.size(), 0);
  for (int v : ordering) {
    if (v < 0 || v >= graph.size() || seen[v]) {
      throw std::invalid_argument("ordering is not a permutation of the vertices");
    }
    seen[v] = 1;
  }
}

int smallest_missing_color(const std::vector<int>& colors, const std::vector<int>& neighbor_list,
                           std::vector<char>& used_scratch, int num_colors) {
  std::fill(used_scratch.begin(), used_scratch.begin() + num_colors, 0);
  for (int u : neighbor_list) {
    const int c = colors[u];
    if (c >= 0) {
      used_scratch[c] = 1;
    }
  }
  for (int c = 0; c < num_colors; ++c) {
    if (!used_scratch[c]) {
      return c;
    }
  }
  return num_colors;
}

// Scratch buffers reused across all interchange attempts of one coloring run.
struct InterchangeScratch {
  explicit InterchangeScratch(int n, int words)
      : is_neighbor(n, 0), in_component(n, 0), words_per_row(words) {}

  std::vector<char> is_neighbor;
  std::vector<char> in_component;
  std::vector<int> component;
  std::vector<int> stack;
  std::vector<std::vector<int>> neighbors_by_color;
  std::vector<std::vector<std::uint64_t>> neighbor_mask_by_color;
  int words_per_row;
};

// Tries to free one of the existing colors for `v` by swapping a bichromatic
// component; pairs (i, j) are scanned in ascending order and the first
// success wins. Mutates `colors` and returns true on success.
bool attempt_interchange(const DenseGraph& graph, const std::vector<std::vector<int>>& adjacency,
                         std::vector<int>& colors, int num_colors, int v,
                         InterchangeScratch& scratch) {
  const std::vector<int>& nbrs = adjacency[v];

  if (static_cast<int>(scratch.neighbors_by_color.size()) < num_colors) {
    scratch.neighbors_by_color.resize(num_colors);
    scratch.neighbor_mask_by_color.resize(num_colors);
  }
  for (int c = 0; c < num_colors; ++c) {
    scratch.neighbors_by_color[c].clear();
    scratch.neighbor_mask_by_color[c].assign(scratch.words_per_row, 0);
  }
  for (int u : nbrs) {
    scratch.is_neighbor[u] = 1;
    const int c = colors[u];
    if (c >= 0) {
      scratch.neighbors_by_color[c].push_back(u);
      scratch.neighbor_mask_by_color[c][u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }

  bool success = false;
  int success_color = -1;
  for (int i = 0; i < num_colors && !success; ++i) {
    for (int j = i + 1; j < num_colors && !success; ++j) {
      // An i-colored neighbor directly adjacent to a j-colored neighbor puts
      // both in one bichromatic component; the pair cannot free color i.
      bool failed = false;
      for (int u : scratch.neighbors_by_color[i]) {
        if (graph.row_intersects(u, scratch.neighbor_mask_by_color[j])) {
          failed = true;
          break;
        }
      }

      if (!failed) {
        // Flood the {i, j}-induced subgraph from the i-colored neighbors,
        // aborting as soon as it touches a j-colored neighbor of v.
        scratch.component.clear();
        scratch.stack.clear();
        for (int u : scratch.neighbors_by_color[i]) {
          scratch.in_component[u] = 1;
          scratch.component.push_back(u);
          scratch.stack.push_back(u);
        }
        while (!scratch.stack.empty() && !failed) {
          const int w = scratch.stack.back();
          scratch.stack.pop_back();
          for (int x : adjacency[w]) {
            const int cx = colors[x];
            if ((cx != i && cx != j) || scratch.in_component[x]) {
              continue;
            }
            if (cx == j && scratch.is_neighbor[x]) {
              failed = true;
              break;
            }
            scratch.in_component[x] = 1;
            scratch.component.push_back(x);
            scratch.stack.push_back(x);
          }
        }
        if (!failed) {
          for (int w : scratch.component) {
            colors[w] = (colors[w] == i) ? j : i;
          }
          success = true;
          success_color = i;
        }
        for (int w : scratch.component) {
          scratch.in_component[w] = 0;
        }
      }
    }
  }

  for (int u : nbrs) {
    scratch.is_neighbor[u] = 0;
  }
  if (success) {
    colors[v] = success_color;
  }
  return success;
}

}  // namespace

std::vector<int> smallest_last_ordering(const DenseGraph& graph) {
  const int n = graph.size();
  const auto adjacency = graph.adjacency_lists();
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adjacency[v].size());
  }
  std::vector<char> removed(n, 0);
  std::vector<int> removal;
  removal.reserve(n);

  for (int step = 0; step < n; ++step) {
    // Among minimum-degree vertices, remove the highest index: reversal then
    // breaks ties by ascending vertex index in the final ordering.
    int best = -1;
    int best_degree = std::numeric_limits<int>::max();
    for (int v = n - 1; v >= 0; --v) {
      if (!removed[v] && degree[v] < best_degree) {
        best = v;
        best_degree = degree[v];
      }
    }
    removed[best] = 1;
    removal.push_back(best);
    for (int u : adjacency[best]) {
      if (!removed[u]) {
        --degree[u];
      }
    }
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

std::vector<int> greedy_color(const DenseGraph& graph, const std::vector<int>& ordering) {
  check_ordering(graph, ordering);
  const auto adjacency = graph.adjacency_lists();
  std::vector<int> colors(graph.size(), -1);
  std::vector<char> used(graph.size() + 1, 0);
  int num_colors = 0;
  for (int v : ordering) {
    const int c = smallest_missing_color(colors, adjacency[v], used, num_colors);
    colors[v] = c;
    num_colors = std::max(num_colors, c + 1);
  }
  return colors;
}

std::vector<int> greedy_color_with_interchange(const DenseGraph& graph,
                                               const std::vector<int>& ordering) {
  check_ordering(graph, ordering);
  const auto adjacency = graph.adjacency_lists();
  std::vector<int> colors(graph.size(), -1);
  std::vector<char> used(graph.size() + 1, 0);
  InterchangeScratch scratch(graph.size(), graph.words_per_row());
  int num_colors = 0;
  for (int v : ordering) {
    const int c = smallest_missing_color(colors, adjacency[v], used, num_colors);
    if (c < num_colors) {
      colors[v] = c;
      continue;
    }
    if (num_colors >= 2 && attempt_interchange(graph, adjacency, colors, num_colors, v, scratch)) {
      continue;
    }
    colors[v] = num_colors++;
  }
  return colors;
}

int color_count(const std::vector<int>& colors) {
  int max_color = -1;
  for (int c : colors) {
    max_color = std::max(max_color, c);
  }
  return max_color + 1;
}

}  // namespace pedfuse
