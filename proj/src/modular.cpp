#include "tww/modular.hpp"

#include <algorithm>
#include <map>

#include <boost/dynamic_bitset.hpp>

namespace tww {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Bits> adjacency_bits(const Graph& g) {
  std::vector<Bits> adj(static_cast<std::size_t>(g.n()) + 1,
                        Bits(static_cast<std::size_t>(g.n()) + 1));
  for (auto [a, b] : g.edges()) {
    adj[a].set(b);
    adj[b].set(a);
  }
  return adj;
}

Bits closure(const std::vector<Bits>& adj, Bits s) {
  const std::size_t n = adj.size() - 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t x = 1; x <= n; ++x) {
      if (s.test(x)) continue;
      bool some = adj[x].intersects(s);
      if (some && !s.is_subset_of(adj[x])) {
        s.set(x);
        grew = true;
      }
    }
  }
  return s;
}

std::vector<int> to_vector(const Bits& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

bool is_complete(const Graph& g) {
  return g.edge_count() == static_cast<long long>(g.n()) * (g.n() - 1) / 2;
}

bool is_edgeless(const Graph& g) { return g.edge_count() == 0; }

std::vector<int> module_closure(const Graph& g, const std::vector<int>& seed) {
  Bits s(static_cast<std::size_t>(g.n()) + 1);
  for (int v : seed) {
    if (!g.has_vertex(v)) throw PreconditionError("module_closure: vertex out of range");
    s.set(v);
  }
  return to_vector(closure(adjacency_bits(g), s));
}

ModularPartition maximal_modular_partition(const Graph& g) {
  const int n = g.n();
  if (n < 2) throw PreconditionError("maximal_modular_partition needs at least two vertices");
  ModularPartition mp;
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) all[v - 1] = v;

  if (is_complete(g) || is_edgeless(g)) {
    mp.parts.parts = {all};
  } else if (auto comps = g.components(); comps.size() > 1) {
    mp.parts.parts = comps;
  } else if (auto co = g.complement().components(); co.size() > 1) {
    mp.parts.parts = co;
  } else {
    auto adj = adjacency_bits(g);
    std::vector<int> part(static_cast<std::size_t>(n) + 1, 0);
    int count = 0;
    for (int v = 1; v <= n; ++v) {
      if (part[v]) continue;
      part[v] = ++count;
      std::vector<int> members{v};
      for (int u = v + 1; u <= n; ++u) {
        if (part[u]) continue;
        Bits s(static_cast<std::size_t>(n) + 1);
        s.set(v);
        s.set(u);
        if (closure(adj, s).count() < static_cast<std::size_t>(n)) {
          part[u] = count;
          members.push_back(u);
        }
      }
      mp.parts.parts.push_back(std::move(members));
    }
    mp.prime = count == n;
  }
#ifndef NDEBUG
  // Every part must be a module of g.
  for (std::size_t i = 0; i < mp.parts.parts.size(); ++i) {
    std::vector<int> rest;
    for (int v : all)
      if (!std::binary_search(mp.parts.parts[i].begin(), mp.parts.parts[i].end(), v))
        rest.push_back(v);
    if (!is_module(g, mp.parts.parts[i], rest))
      throw std::logic_error("maximal_modular_partition produced a non-module");
  }
#endif
  mp.quotient = quotient(g, mp.parts);
  return mp;
}

std::vector<TraceClass> trace_class_list(const Graph& g, const std::vector<int>& x) {
  std::vector<char> in(static_cast<std::size_t>(g.n()) + 1, 0);
  for (int v : x) {
    if (!g.has_vertex(v)) throw PreconditionError("trace_classes: vertex out of range");
    in[v] = 1;
  }
  std::map<std::vector<int>, std::vector<int>> by_trace;
  for (int v = 1; v <= g.n(); ++v) {
    if (in[v]) continue;
    std::vector<int> tr;
    for (int w : g.neighbors(v))
      if (in[w]) tr.push_back(w);
    by_trace[tr].push_back(v);
  }
  std::vector<TraceClass> out;
  for (auto& [tr, members] : by_trace) out.push_back({tr, members});
  return out;
}

Partition trace_classes(const Graph& g, const std::vector<int>& x) {
  Partition p;
  for (auto& c : trace_class_list(g, x)) p.parts.push_back(std::move(c.members));
  return p;
}

}  // namespace tww
