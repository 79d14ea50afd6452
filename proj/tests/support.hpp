#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "tww/reduction.hpp"
#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

namespace tst {

using tww::Graph;

inline Graph path(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n, 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 2; i <= leaves + 1; ++i) g.add_edge(1, i);
  return g;
}

inline Graph biclique(int a, int b) {
  Graph g(a + b);
  for (int i = 1; i <= a; ++i)
    for (int j = a + 1; j <= a + b; ++j) g.add_edge(i, j);
  return g;
}

// Labeled graph on n vertices from the bits of `mask` over pairs (i<j).
inline Graph from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++bit)
      if (mask >> bit & 1) g.add_edge(i, j);
  return g;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (g.components().size() == 1) return g;
  }
}

// Complement of a disjoint union and disjoint unions, recursively: a cograph.
inline Graph random_cograph(int n, std::mt19937_64& rng) {
  if (n == 1) return Graph(1);
  int a = std::uniform_int_distribution<int>(1, n - 1)(rng);
  Graph x = random_cograph(a, rng), y = random_cograph(n - a, rng);
  bool join = std::bernoulli_distribution(0.5)(rng);
  Graph g(n);
  for (auto [u, v] : x.edges()) g.add_edge(u, v);
  for (auto [u, v] : y.edges()) g.add_edge(a + u, a + v);
  if (join)
    for (int u = 1; u <= a; ++u)
      for (int v = a + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

// Grows a graph of twin-width at most 1 by splitting vertices into twins,
// or into near-twins differing on one fresh edge (a pendant-path step).
inline Graph random_tww1(int n, std::mt19937_64& rng) {
  std::vector<std::vector<int>> adj(1);
  adj.push_back({});
  while (static_cast<int>(adj.size()) - 1 < n) {
    int cur = static_cast<int>(adj.size()) - 1;
    int v = std::uniform_int_distribution<int>(1, cur)(rng);
    int kind = std::uniform_int_distribution<int>(0, 2)(rng);
    int w = cur + 1;
    adj.push_back({});
    if (kind == 0 || kind == 1) {
      for (int x : adj[v]) {
        adj[w].push_back(x);
        adj[x].push_back(w);
      }
      if (kind == 1) {
        adj[w].push_back(v);
        adj[v].push_back(w);
      }
    } else {
      adj[w].push_back(v);
      adj[v].push_back(w);
    }
  }
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int x : adj[u])
      if (u < x) g.add_edge_if_absent(u, x);
  return g;
}

// ---- independent brute-force oracles -------------------------------------

inline bool dominates(const Graph& g, std::uint64_t set) {
  for (int v = 1; v <= g.n(); ++v) {
    if (set >> v & 1) continue;
    bool hit = false;
    for (int w : g.neighbors(v)) hit = hit || (set >> w & 1);
    if (!hit) return false;
  }
  return true;
}

inline int brute_domination(const Graph& g) {
  int best = g.n();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()); ++m) {
    int c = __builtin_popcountll(m);
    if (c < best && dominates(g, m << 1)) best = c;
  }
  return best;
}

inline bool covers(const Graph& g, std::uint64_t set) {
  for (auto [u, v] : g.edges())
    if (!(set >> u & 1) && !(set >> v & 1)) return false;
  return true;
}

inline int brute_vertex_cover(const Graph& g) {
  int best = g.n();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()); ++m) {
    int c = __builtin_popcountll(m);
    if (c < best && covers(g, m << 1)) best = c;
  }
  return best;
}

inline bool induces_connected(const Graph& g, std::uint64_t set) {
  int first = 0;
  for (int v = 1; v <= g.n(); ++v)
    if (set >> v & 1) {
      first = v;
      break;
    }
  if (first == 0) return true;
  std::uint64_t seen = std::uint64_t{1} << first;
  std::vector<int> stack{first};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x))
      if ((set >> y & 1) && !(seen >> y & 1)) {
        seen |= std::uint64_t{1} << y;
        stack.push_back(y);
      }
  }
  return seen == set;
}

// -1 when no connected vertex cover exists.
inline int brute_connected_vc(const Graph& g) {
  int best = -1;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()); ++m) {
    int c = __builtin_popcountll(m);
    if ((best < 0 || c < best) && covers(g, m << 1) && induces_connected(g, m << 1)) best = c;
  }
  return best;
}

// Plain recursion over every contraction order, no memo; n <= 6.
inline int brute_twinwidth(const tww::Trigraph& t, int so_far = 0) {
  if (t.vertex_count() <= 1) return so_far;
  auto vs = t.vertices();
  int best = 1 << 20;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      tww::Trigraph nx = tww::contract(t, vs[i], vs[j], t.max_id() + 1);
      int w = std::max(so_far, nx.max_red_degree());
      if (w >= best) continue;
      best = std::min(best, brute_twinwidth(nx, w));
    }
  return best;
}

// Vertex cover number by branching: a max-degree vertex v is either in
// the cover or all of N(v) is. Needs n <= 62.
inline int branch_vertex_cover(const tww::Graph& g) {
  const int n = g.n();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) + 1, 0);
  for (auto [a, b] : g.edges()) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }
  int best = n;
  std::function<void(std::uint64_t, int)> go = [&](std::uint64_t alive, int used) {
    if (used >= best) return;
    int v = -1, deg = 0;
    for (int x = 1; x <= n; ++x)
      if (alive >> x & 1) {
        int d = __builtin_popcountll(adj[x] & alive);
        if (d > deg) deg = d, v = x;
      }
    if (v < 0) {
      best = used;
      return;
    }
    go(alive & ~(std::uint64_t{1} << v), used + 1);
    go(alive & ~(adj[v] & alive) & ~(std::uint64_t{1} << v), used + deg);
  };
  go((std::uint64_t{1} << (n + 1)) - 2, 0);  // bits 1..n, n <= 62
  return best;
}

// Formula satisfiability by enumeration over n variables.
inline std::optional<std::vector<bool>> brute_sat(const tww::LayoutFormula& f, int n_total) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n_total); ++m) {
    std::vector<bool> a(static_cast<std::size_t>(n_total) + 1);
    for (int x = 1; x <= n_total; ++x) a[x] = m >> (x - 1) & 1;
    if (tww::satisfies(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace tst

namespace tst {

// Trigraph where u (1) and v (2) share black, red and mixed neighbours:
// u black to u2 x1 x2 x4 x6 x7, red to u1 x3 x5;
// v black to x1 x2 x3 x6 x7 v1, red to x4 x5 v2.
// Ids: u1=3 u2=4 x1..x7=5..11 v1=12 v2=13.
struct MixedExample {
  tww::Trigraph t;
  static constexpr int u = 1, v = 2, u1 = 3, u2 = 4, v1 = 12, v2 = 13;
  static constexpr int x(int i) { return 4 + i; }
};

inline MixedExample mixed_example() {
  MixedExample m;
  m.t = tww::Trigraph::with_original_count(13);
  for (int i = 1; i <= 13; ++i) m.t.add_vertex(i, {i});
  using tww::EdgeKind;
  for (int w : {MixedExample::u2, MixedExample::x(1), MixedExample::x(2), MixedExample::x(4),
                MixedExample::x(6), MixedExample::x(7)})
    m.t.set_edge(MixedExample::u, w, EdgeKind::Black);
  for (int w : {MixedExample::u1, MixedExample::x(3), MixedExample::x(5)})
    m.t.set_edge(MixedExample::u, w, EdgeKind::Red);
  for (int w : {MixedExample::x(1), MixedExample::x(2), MixedExample::x(3), MixedExample::x(6),
                MixedExample::x(7), MixedExample::v1})
    m.t.set_edge(MixedExample::v, w, EdgeKind::Black);
  for (int w : {MixedExample::x(4), MixedExample::x(5), MixedExample::v2})
    m.t.set_edge(MixedExample::v, w, EdgeKind::Red);
  return m;
}

}  // namespace tst

namespace tst {

// Random formula whose clauses follow a removal ordering per sign: each
// clause takes three consecutive survivors and retires the middle one.
inline tww::LayoutFormula random_layout_formula(int n, int plus, int minus, std::mt19937_64& rng) {
  tww::LayoutFormula f;
  f.n = n;
  for (auto [sign, count] : {std::pair('+', plus), std::pair('-', minus)}) {
    std::vector<int> alive(static_cast<std::size_t>(n));
    std::iota(alive.begin(), alive.end(), 1);
    for (int r = 1; r <= count && alive.size() >= 3; ++r) {
      std::size_t i = std::uniform_int_distribution<std::size_t>(0, alive.size() - 3)(rng);
      tww::LayoutClause c;
      c.sign = sign;
      c.rank = r;
      for (int k = 0; k < 3; ++k) c.lits[k] = alive[i + k] * (rng() % 2 ? 1 : -1);
      std::shuffle(c.lits.begin(), c.lits.end(), rng);
      alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      f.clauses.push_back(c);
    }
  }
  return f;
}

}  // namespace tst

namespace tst {

// N isolated vertices, one per part along the cycle; forced domination
// number N. With `no` set, the first part holds two isolated vertices.
inline tww::AnnotatedInstance micro_instance(int p, int q, bool no) {
  auto cyc = tww::hamiltonian_cycle(p, q);
  const int N = static_cast<int>(cyc.size());
  tww::AnnotatedInstance a;
  a.p = p;
  a.q = q;
  a.graph = tww::Graph(N + (no ? 1 : 0));
  a.witness.n = a.graph.n();
  for (int j = 0; j < N; ++j) {
    a.parts.push_back({j + 1});
    a.eta.push_back(cyc[static_cast<std::size_t>(j)]);
  }
  if (no) {
    a.parts[0].push_back(N + 1);
    a.witness.push(1, N + 1);
  }
  return a;
}

}  // namespace tst
