#pragma once

#include <vector>

#include "tww/trigraph.hpp"

namespace tww {

struct ModularPartition {
  Partition parts;
  Trigraph quotient;   // all black
  bool prime = false;  // only trivial modules; parts are then singletons
};

// Components if g is disconnected, co-components if its complement is,
// otherwise the maximal proper modules. Complete and edgeless graphs give a
// single part holding every vertex. Throws for fewer than two vertices.
ModularPartition maximal_modular_partition(const Graph& g);

// Smallest module of g containing every vertex of `seed`.
std::vector<int> module_closure(const Graph& g, const std::vector<int>& seed);

bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);

struct TraceClass {
  std::vector<int> trace;    // N(v) ∩ X, sorted
  std::vector<int> members;  // sorted
};

// V \ X grouped by trace, classes in lexicographic trace order.
std::vector<TraceClass> trace_class_list(const Graph& g, const std::vector<int>& x);
Partition trace_classes(const Graph& g, const std::vector<int>& x);

}  // namespace tww
