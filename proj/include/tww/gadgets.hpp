#pragma once

#include <compare>
#include <map>
#include <vector>

#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// 1-based (row, col) on a fine grid; row 1 is the bottom row.
struct FinePoint {
  int row = 0, col = 0;
  friend auto operator<=>(const FinePoint&, const FinePoint&) = default;
};

inline bool grid_adjacent(FinePoint a, FinePoint b) {
  int dr = a.row - b.row, dc = a.col - b.col;
  return (dr == 0 && (dc == 1 || dc == -1)) || (dc == 0 && (dr == 1 || dr == -1));
}

// Fine grid of an s x t snaking grid: 3(s-1)+1 rows, 3(t-1)+1 columns.
struct GridShape {
  int rows = 0, cols = 0;
  static GridShape of(int s, int t) { return {3 * (s - 1) + 1, 3 * (t - 1) + 1}; }
  int size() const { return rows * cols; }
  // Row-major id starting at 1.
  int id(FinePoint p) const { return (p.row - 1) * cols + p.col; }
  FinePoint point(int id) const { return {(id - 1) / cols + 1, (id - 1) % cols + 1}; }
  bool contains(FinePoint p) const {
    return p.row >= 1 && p.row <= rows && p.col >= 1 && p.col <= cols;
  }
};

struct SnakingGrid {
  int s = 0, t = 0;
  GridShape shape;
  Graph graph;  // vertex ids follow shape.id
};

// Requires s >= 1 and t >= 2; s = 1 is the single-row degenerate case.
SnakingGrid snaking_grid(int s, int t);

// Cyclic order y_1..y_N of all fine points of the p x q snaking grid.
// Requires p >= 2, q >= 2 and q even.
std::vector<FinePoint> hamiltonian_cycle(int p, int q);

// Snaking grid plus the hamiltonian cycle, on shape ids.
Graph augmented_snaking_grid(int p, int q);

enum class PositionColor { Blue, Purple, Orange, Path };

struct PositionClass {
  PositionColor color = PositionColor::Blue;
  int layer = -1;  // path positions: index of the row pair
  int rank = -1;   // path positions: left-to-right rank along the pair
};

// Indexed by shape id (entry 0 unused).
std::vector<PositionClass> classify_positions(int p, int q);
// Homologous-merge order: blue, purple, orange, the purples of the top snake
// row, then paths by (layer, rank).
std::vector<FinePoint> merge_order(int p, int q);

struct HalfGraphCycle {
  int layers = 0, height = 0;
  Graph graph;  // a^p_i has id p*height + i for p in [0, layers), i in [1, height]
  ContractionSequence sequence;
};
HalfGraphCycle halfgraph_cycle(int layers, int height);

// Contraction sequence collapsing a trigraph whose live vertices are
// embedded injectively in a grid with every edge grid-adjacent: merge
// columns left to right row by row, then the last column bottom to top.
ContractionSequence grid_subdivision_collapse(const Trigraph& t,
                                              const std::map<int, FinePoint>& embedding);

// Variable wire: gadget 0 is the initial triangle, every other gadget a bull
// whose parent propagates into it.
struct Wire {
  Graph graph;
  std::vector<int> top, bot;  // per gadget
  std::vector<std::vector<int>> parts;
};
Wire build_wire(const std::vector<int>& parent);

}  // namespace tww
