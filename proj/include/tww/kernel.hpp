#pragma once

#include <vector>

#include "tww/oracle.hpp"
#include "tww/trigraph.hpp"

namespace tww {

struct RuleRecord {
  int rule = 0;              // 0 = isolated vertex strip, 1..3 = reduction rules
  int vertex = 0;            // original id of the deleted vertex
  std::vector<int> trace;    // witnessing class: N(v) ∩ X in original ids
};

struct KernelInstance {
  bool trivial_no = false;
  Graph graph;               // reduced graph on ids 1..n'
  std::vector<int> orig;     // orig[new id] = input id; orig[0] unused
  std::vector<int> cap;      // capacities by new id (capacitated kernel only)
  int k = 0;
  std::vector<int> vc;       // X, input ids
  std::vector<RuleRecord> trace;
};

// Both endpoints of a greedy maximal matching (edges in id order).
std::vector<int> two_approx_vc(const Graph& g);

KernelInstance cvc_kernel_quadratic(const Graph& g, int k);
KernelInstance capvc_kernel(const CapacitatedGraph& cg, int k);
KernelInstance cvc_kernel_improved(const Graph& g, int k);

// Rule preconditions on a graph relative to X (ids of that graph).
bool rule1_applicable(const Graph& g, const std::vector<int>& x, int k);
bool rule3_applicable(const Graph& g, const std::vector<int>& x, int k);
// X^s: members of X with at most k neighbours outside X.
std::vector<int> small_side(const Graph& g, const std::vector<int>& x, int k);

// (|Y'| - q')^2 <= q' * k * |X^s| over the classes with X_i nonempty.
bool improved_size_bound_holds(const Graph& g, const std::vector<int>& x, int k);

// X restricted to the vertices kept by a kernel, in new ids.
std::vector<int> kernel_vc(const KernelInstance& ki);

struct TraceCountReport {
  int x_size = 0;
  int class_count = 0;
  double ratio = 0;
};
TraceCountReport trace_count(const Graph& g, const std::vector<int>& x);

// Documented constant c_t = 8/3 (t+1)^2 2^{4t}; never enforced.
double trace_constant(int t);

}  // namespace tww
