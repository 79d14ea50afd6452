#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tww/gadgets.hpp"
#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// Dominating Set instance with a partition onto the fine points of a
// p x q snaking grid and a partial sequence contracting every part.
struct AnnotatedInstance {
  Graph graph;
  int p = 0, q = 0;
  std::vector<std::vector<int>> parts;  // B_1..B_N
  std::vector<FinePoint> eta;           // eta[j] is the point of parts[j]
  ContractionSequence witness;

  int N() const { return static_cast<int>(parts.size()); }
};

struct InstanceReport {
  bool partition_ok = false;
  bool spanning_ok = false;   // quotient is a spanning subgraph under eta
  bool witness_ok = false;    // witness ends exactly at the quotient
  bool width_ok = false;      // witness width <= 4
  bool confined_ok = false;   // every part has a vertex with N[v] inside it
  int width = -1;
  std::string error;
  bool ok() const { return partition_ok && spanning_ok && witness_ok && width_ok && confined_ok; }
};

InstanceReport validate_instance(const AnnotatedInstance& inst);

struct FormulaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LayoutClause {
  char sign = '+';               // '+' above the variable row, '-' below
  int rank = 0;                  // 1-based position in the removal ordering
  std::array<int, 3> lits{};     // signed variables
};

struct LayoutFormula {
  int n = 0;  // variables 1..n in layout order
  std::vector<LayoutClause> clauses;
};

// Greedy removal ordering for clauses given as variable triples. Returns
// the clause indices in removal order, or nothing when stuck.
std::optional<std::vector<int>> removal_ordering(const std::vector<std::array<int, 3>>& clauses,
                                                 int n);

// Throws FormulaError on malformed literals, bad ranks, or a declared order
// that is not a removal ordering.
void validate_formula(const LayoutFormula& f);

bool satisfies(const LayoutFormula& f, const std::vector<bool>& assignment);  // 1-based

enum class GadgetKind { Initial, Bull, Clause, Dummy };

struct Gadget {
  GadgetKind kind = GadgetKind::Dummy;
  FinePoint cell;
  int var = 0;       // wire variable for Initial/Bull
  int clause = -1;   // clause index for Clause
  int parent = -1;   // part index of the propagating gadget
  // Initial: top, bot, d. Bull: top, bot, d, t, f. Clause: c, z. Dummy: z.
  std::vector<int> vertices;
};

struct Reduction {
  AnnotatedInstance instance;
  int n_padded = 0;
  int m = 0;
  std::vector<Gadget> gadgets;  // by part index
};

Reduction reduce_3sat(const LayoutFormula& f);

// Top or bottom of every wire gadget by the variable's value, plus the
// isolated vertex of every clause and dummy gadget.
std::vector<int> lift_assignment(const Reduction& r, const std::vector<bool>& assignment);

}  // namespace tww
