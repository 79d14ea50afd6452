#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tww/compose.hpp"
#include "tww/kernel.hpp"
#include "tww/oracle.hpp"
#include "tww/reduction.hpp"
#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

namespace tww {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

// Contents of a graph or trigraph file. Without `bag` lines the live
// vertices are 1..n; otherwise they are exactly the ids carrying a bag.
struct GraphFile {
  int n = 0;
  std::vector<std::pair<int, int>> black, red;
  std::map<int, std::vector<int>> bags;
  std::vector<int> cap;  // empty unless some `cap` line was present
  bool has_cap = false;

  // Throws PreconditionError for red edges or bags.
  Graph graph() const;
  Trigraph trigraph() const;
  CapacitatedGraph capacitated() const;  // missing capacities are 0
};

GraphFile parse_graph_file(std::istream& in);
Graph parse_graph(std::istream& in);
ContractionSequence parse_sequence(std::istream& in);
LayoutFormula parse_formula(std::istream& in);
AnnotatedInstance parse_instance(std::istream& in);

void write_graph(std::ostream& out, const Graph& g);
void write_capacitated(std::ostream& out, const CapacitatedGraph& cg);
void write_trigraph(std::ostream& out, const Trigraph& t);
void write_sequence(std::ostream& out, const ContractionSequence& s);
void write_formula(std::ostream& out, const LayoutFormula& f);
void write_instance(std::ostream& out, const AnnotatedInstance& inst);
void write_provenance(std::ostream& out, const ComposedInstance& c);
void write_kernel_trace(std::ostream& out, const KernelInstance& k);

// File helpers: throw std::runtime_error when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace tww
