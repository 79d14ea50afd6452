#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tww {

// Thrown when an operation's precondition is violated by its arguments.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 1..n with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  bool has_vertex(int v) const { return v >= 1 && v <= n_; }

  // Throws on self-loops, out-of-range ids and duplicate edges.
  void add_edge(int u, int v);
  // Same as add_edge but silently ignores an already present edge.
  void add_edge_if_absent(int u, int v);
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  long long edge_count() const { return m_; }
  std::vector<std::pair<int, int>> edges() const;

  // Subgraph induced by `keep` (any order); vertex keep[i] becomes i+1.
  Graph induced(const std::vector<int>& keep) const;
  Graph complement() const;
  // Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> components() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
};

enum class EdgeKind : std::uint8_t { None, Black, Red };

// A partition of a ground set into disjoint, non-empty parts.
struct Partition {
  std::vector<std::vector<int>> parts;

  // Throws PreconditionError unless parts are disjoint, non-empty and cover
  // exactly `ground`.
  void validate(const std::vector<int>& ground) const;
  static Partition singletons(const std::vector<int>& ground);
};

// Graph with disjoint black and red edge sets. Every live vertex carries the
// sorted set of original vertices merged into it. Ids are never reused.
class Trigraph {
 public:
  Trigraph() = default;
  explicit Trigraph(const Graph& g);

  // Empty trigraph whose initial ids are 1..n; contractions mint ids above.
  static Trigraph with_original_count(int n);
  void add_vertex(int id, std::vector<int> bag);
  void set_edge(int u, int v, EdgeKind kind);

  bool alive(int v) const {
    return v >= 1 && v < static_cast<int>(alive_.size()) && alive_[v];
  }
  std::vector<int> vertices() const;
  int vertex_count() const { return live_; }
  // Size of the initial id range; contraction k mints id original_count()+k.
  int original_count() const { return n0_; }
  int max_id() const { return max_id_; }

  EdgeKind edge(int u, int v) const;
  const std::vector<int>& black(int v) const { return black_[v]; }
  const std::vector<int>& red(int v) const { return red_[v]; }
  const std::vector<int>& bag(int v) const { return bag_[v]; }

  int red_degree(int v) const;
  int max_red_degree() const;
  long long red_edge_count() const;
  long long black_edge_count() const;

  // In-place contraction of live u != v into fresh z (z > max_id()).
  void contract_in_place(int u, int v, int z);

  // Same vertex set, bags and edge sets.
  friend bool operator==(const Trigraph& a, const Trigraph& b);

 private:
  void ensure(int id);
  void check_live(int v, const char* what) const;

  int n0_ = 0;
  int max_id_ = 0;
  int live_ = 0;
  std::vector<char> alive_;
  std::vector<std::vector<int>> black_;
  std::vector<std::vector<int>> red_;
  std::vector<std::vector<int>> bag_;
};

Trigraph contract(const Trigraph& t, int u, int v, int z);
int red_degree(const Trigraph& t, int v);
int max_red_degree(const Trigraph& t);

// One vertex per part (ids 1..k in part order, bags = parts); black between
// fully adjacent parts, red between partially adjacent ones.
Trigraph quotient(const Graph& g, const Partition& p);

// Every vertex of relative_to is fully adjacent or fully non-adjacent to s.
bool is_module(const Graph& g, const std::vector<int>& s,
               const std::vector<int>& relative_to);

// Sorted-vector helpers shared across modules.
bool sorted_contains(const std::vector<int>& v, int x);
void sorted_insert(std::vector<int>& v, int x);
void sorted_erase(std::vector<int>& v, int x);

}  // namespace tww
