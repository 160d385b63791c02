#pragma once

#include <vector>

#include "pedfuse/graph.hpp"

namespace pedfuse {

/// Smallest-last vertex ordering: repeatedly remove a minimum-degree vertex
/// (ties broken by lowest index) and reverse the removal sequence. In the
/// returned order v1..vn, each vi has minimum degree in the subgraph induced
/// by {v1..vi}.
std::vector<int> smallest_last_ordering(const DenseGraph& graph);

/// First-fit greedy coloring along `ordering`: each vertex gets the smallest
/// color absent from its already-colored neighbors. Returns one color index
/// per vertex.
std::vector<int> greedy_color(const DenseGraph& graph, const std::vector<int>& ordering);

/// Greedy coloring with bichromatic (Kempe-chain) interchange. When a vertex
/// would open a new color, color pairs (i, j) are scanned in ascending order;
/// the connected components of the {i, j}-induced subgraph that contain the
/// vertex's i-colored neighbors are recolored by swapping i and j whenever
/// that frees color i. A new color is opened only if every pair fails.
std::vector<int> greedy_color_with_interchange(const DenseGraph& graph,
                                               const std::vector<int>& ordering);

/// Number of distinct colors in an assignment (max + 1; 0 when empty).
int color_count(const std::vector<int>& colors);

}  // namespace pedfuse
