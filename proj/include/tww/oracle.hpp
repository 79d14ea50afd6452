#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

namespace tww {

struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kTwinWidthCap = 12;
constexpr int kSearchCap = 24;

// `fallback` unless TWW_SIZE_CAP is set to a positive integer.
int size_cap(int fallback);

struct TwinWidthResult {
  int width = 0;
  ContractionSequence sequence;  // an optimal full sequence
};

// Exact twin-width by iterative deepening on the width bound. Failed
// partitions are memoised per bound, keyed on the sorted bag masks.
// cap <= 0 means size_cap(kTwinWidthCap).
TwinWidthResult exact_twinwidth(const Graph& g, int cap = 0);
TwinWidthResult exact_twinwidth(const Trigraph& t, int cap = 0);

struct SetResult {
  int size = 0;
  std::vector<int> set;  // sorted
};

// Minimum dominating set; with forced parts only sets hitting every part
// are admissible. cap <= 0 means size_cap(kSearchCap).
SetResult min_dominating_set(const Graph& g, const std::optional<Partition>& forced = {},
                             int cap = 0);
// Some admissible dominating set of size <= k, or nothing.
std::optional<std::vector<int>> find_dominating_set(const Graph& g, int k,
                                                    const std::optional<Partition>& forced = {},
                                                    int cap = 0);
// Every admissible dominating set of minimum size, each exactly once.
std::vector<std::vector<int>> all_min_dominating_sets(const Graph& g,
                                                      const std::optional<Partition>& forced = {},
                                                      int cap = 0);
bool is_dominating_set(const Graph& g, const std::vector<int>& s);

SetResult min_vertex_cover(const Graph& g, int cap = 0);
// Nothing when the edges span more than one component.
std::optional<SetResult> min_connected_vertex_cover(const Graph& g, int cap = 0);
bool is_vertex_cover(const Graph& g, const std::vector<int>& s);

struct CapacitatedGraph {
  Graph graph;
  std::vector<int> cap;  // indexed by vertex, cap[0] unused; may go negative
};

// X must cover every edge and each x in X takes at most max(0, cap(x)) edges.
bool capacitated_vc_feasible(const CapacitatedGraph& cg, const std::vector<int>& x);
std::optional<std::vector<int>> min_capacitated_vc(const CapacitatedGraph& cg, int k,
                                                   int cap = 0);

}  // namespace tww
