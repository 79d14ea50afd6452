#pragma once

#include <array>
#include <vector>

#include "tww/reduction.hpp"
#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// 2N isolated vertices paired into N parts, parts in hamiltonian-cycle order.
AnnotatedInstance make_dummy(int N, int p, int q);

struct Provenance {
  int row = 0;   // 1..t for inputs, t+1 for the dummy
  int part = 0;  // 1-based column j, so the part sits at y_j
};

// Stage-2 bookkeeping for one homologous contraction.
struct MergeCheck {
  int round = 0;  // rows 1..round are already merged
  FinePoint point;
  int contracted = 0;  // C
  int pending = 0;     // P
};

struct ComposedInstance {
  Graph graph;
  int N = 0, p = 0, q = 0, t = 0;
  // cells[(row-1)*N + (j-1)] = vertices of B_{row,j}, rows 1..t+1.
  std::vector<std::vector<int>> cells;
  std::vector<Provenance> provenance;  // indexed by vertex, entry 0 unused
  ContractionSequence witness;
  std::array<int, 3> stage_steps{};  // contractions per stage
  std::vector<MergeCheck> merges;
  int max_c2p = 0;                   // max of C + 2P over all merges

  const std::vector<int>& cell(int row, int j) const { return cells[(row - 1) * N + (j - 1)]; }
  // C_j plus the dummy part adjacent only to it; every dominating set hits each.
  Partition forced_parts() const;
  // Whether u v is an edge added between consecutive columns.
  bool half_graph_pair(int u, int v) const;
};

// Throws PreconditionError on an empty input, mismatched (N, p, q) or an
// input failing validate_instance.
ComposedInstance or_cross_compose(const std::vector<AnnotatedInstance>& instances);

}  // namespace tww
