#include "tww/trigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tww {

bool sorted_contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void sorted_insert(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

void sorted_erase(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw PreconditionError("negative vertex count");
}

void Graph::add_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v))
    throw PreconditionError("edge endpoint out of range: " + std::to_string(u) +
                            " " + std::to_string(v));
  if (u == v) throw PreconditionError("self-loop at " + std::to_string(u));
  if (adjacent(u, v))
    throw PreconditionError("duplicate edge " + std::to_string(u) + " " +
                            std::to_string(v));
  sorted_insert(adj_[u], v);
  sorted_insert(adj_[v], u);
  ++m_;
}

void Graph::add_edge_if_absent(int u, int v) {
  if (has_vertex(u) && has_vertex(v) && u != v && adjacent(u, v)) return;
  add_edge(u, v);
}

bool Graph::adjacent(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  return sorted_contains(a, &a == &adj_[u] ? v : u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> pos(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!has_vertex(keep[i]) || pos[keep[i]] != 0)
      throw PreconditionError("induced: invalid or repeated vertex");
    pos[keep[i]] = static_cast<int>(i) + 1;
  }
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (int w : adj_[keep[i]])
      if (pos[w] > static_cast<int>(i) + 1) h.add_edge(static_cast<int>(i) + 1, pos[w]);
  return h;
}

Graph Graph::complement() const {
  Graph h(n_);
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v)
      if (!adjacent(u, v)) h.add_edge(u, v);
  return h;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> seen(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : adj_[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// ------------------------------------------------------------ Partition

void Partition::validate(const std::vector<int>& ground) const {
  std::vector<int> all;
  for (const auto& p : parts) {
    if (p.empty()) throw PreconditionError("partition has an empty part");
    all.insert(all.end(), p.begin(), p.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw PreconditionError("partition parts overlap");
  std::vector<int> g = ground;
  std::sort(g.begin(), g.end());
  if (all != g) throw PreconditionError("partition does not cover the ground set");
}

Partition Partition::singletons(const std::vector<int>& ground) {
  Partition p;
  for (int v : ground) p.parts.push_back({v});
  return p;
}

// ------------------------------------------------------------- Trigraph

Trigraph::Trigraph(const Graph& g) {
  *this = with_original_count(g.n());
  for (int v = 1; v <= g.n(); ++v) add_vertex(v, {v});
  for (int v = 1; v <= g.n(); ++v) black_[v] = g.neighbors(v);
}

Trigraph Trigraph::with_original_count(int n) {
  Trigraph t;
  t.n0_ = n;
  t.ensure(n);
  return t;
}

void Trigraph::ensure(int id) {
  if (id >= static_cast<int>(alive_.size())) {
    std::size_t sz = static_cast<std::size_t>(id) + 1;
    alive_.resize(sz, 0);
    black_.resize(sz);
    red_.resize(sz);
    bag_.resize(sz);
  }
}

void Trigraph::add_vertex(int id, std::vector<int> bag) {
  if (id < 1) throw PreconditionError("vertex id must be positive");
  if (alive(id)) throw PreconditionError("vertex " + std::to_string(id) + " already present");
  ensure(id);
  std::sort(bag.begin(), bag.end());
  alive_[id] = 1;
  bag_[id] = std::move(bag);
  max_id_ = std::max(max_id_, id);
  ++live_;
}

void Trigraph::set_edge(int u, int v, EdgeKind kind) {
  check_live(u, "set_edge");
  check_live(v, "set_edge");
  if (u == v) throw PreconditionError("self-loop at " + std::to_string(u));
  sorted_erase(black_[u], v);
  sorted_erase(black_[v], u);
  sorted_erase(red_[u], v);
  sorted_erase(red_[v], u);
  if (kind == EdgeKind::Black) {
    sorted_insert(black_[u], v);
    sorted_insert(black_[v], u);
  } else if (kind == EdgeKind::Red) {
    sorted_insert(red_[u], v);
    sorted_insert(red_[v], u);
  }
}

void Trigraph::check_live(int v, const char* what) const {
  if (!alive(v))
    throw PreconditionError(std::string(what) + ": vertex " + std::to_string(v) +
                            " is not live");
}

std::vector<int> Trigraph::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(live_));
  for (int v = 1; v < static_cast<int>(alive_.size()); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

EdgeKind Trigraph::edge(int u, int v) const {
  if (!alive(u) || !alive(v)) return EdgeKind::None;
  if (sorted_contains(black_[u], v)) return EdgeKind::Black;
  if (sorted_contains(red_[u], v)) return EdgeKind::Red;
  return EdgeKind::None;
}

int Trigraph::red_degree(int v) const {
  check_live(v, "red_degree");
  return static_cast<int>(red_[v].size());
}

int Trigraph::max_red_degree() const {
  std::size_t best = 0;
  for (int v = 1; v < static_cast<int>(alive_.size()); ++v)
    if (alive_[v]) best = std::max(best, red_[v].size());
  return static_cast<int>(best);
}

long long Trigraph::red_edge_count() const {
  long long s = 0;
  for (int v = 1; v < static_cast<int>(alive_.size()); ++v)
    if (alive_[v]) s += static_cast<long long>(red_[v].size());
  return s / 2;
}

long long Trigraph::black_edge_count() const {
  long long s = 0;
  for (int v = 1; v < static_cast<int>(alive_.size()); ++v)
    if (alive_[v]) s += static_cast<long long>(black_[v].size());
  return s / 2;
}

void Trigraph::contract_in_place(int u, int v, int z) {
  check_live(u, "contract");
  check_live(v, "contract");
  if (u == v) throw PreconditionError("contract: u and v are equal");
  if (z <= max_id_)
    throw PreconditionError("contract: id " + std::to_string(z) + " is not fresh");

  // Neighbours of u and v tagged by edge kind, merged in id order.
  auto tagged = [&](int w) {
    std::vector<std::pair<int, EdgeKind>> out;
    out.reserve(black_[w].size() + red_[w].size());
    std::size_t i = 0, j = 0;
    const auto& b = black_[w];
    const auto& r = red_[w];
    while (i < b.size() || j < r.size()) {
      if (j == r.size() || (i < b.size() && b[i] < r[j]))
        out.emplace_back(b[i++], EdgeKind::Black);
      else
        out.emplace_back(r[j++], EdgeKind::Red);
    }
    return out;
  };
  auto nu = tagged(u);
  auto nv = tagged(v);

  std::vector<std::pair<int, EdgeKind>> nz;
  std::size_t i = 0, j = 0;
  while (i < nu.size() || j < nv.size()) {
    int x;
    EdgeKind k;
    if (j == nv.size() || (i < nu.size() && nu[i].first < nv[j].first)) {
      x = nu[i++].first;
      k = EdgeKind::Red;
    } else if (i == nu.size() || nv[j].first < nu[i].first) {
      x = nv[j++].first;
      k = EdgeKind::Red;
    } else {
      x = nu[i].first;
      k = (nu[i].second == EdgeKind::Black && nv[j].second == EdgeKind::Black)
              ? EdgeKind::Black
              : EdgeKind::Red;
      ++i;
      ++j;
    }
    if (x != u && x != v) nz.emplace_back(x, k);
  }

  for (const auto& [x, k] : nu) {
    sorted_erase(black_[x], u);
    sorted_erase(red_[x], u);
  }
  for (const auto& [x, k] : nv) {
    sorted_erase(black_[x], v);
    sorted_erase(red_[x], v);
  }

  std::vector<int> bag;
  bag.reserve(bag_[u].size() + bag_[v].size());
  std::merge(bag_[u].begin(), bag_[u].end(), bag_[v].begin(), bag_[v].end(),
             std::back_inserter(bag));
  for (int w : {u, v}) {
    alive_[w] = 0;
    black_[w].clear();
    red_[w].clear();
    bag_[w].clear();
  }
  live_ -= 2;

  add_vertex(z, std::move(bag));
  for (const auto& [x, k] : nz) {
    // z exceeds every live id, so appending keeps the lists sorted.
    if (k == EdgeKind::Black) {
      black_[x].push_back(z);
      black_[z].push_back(x);
    } else {
      red_[x].push_back(z);
      red_[z].push_back(x);
    }
  }
}

bool operator==(const Trigraph& a, const Trigraph& b) {
  auto va = a.vertices();
  if (va != b.vertices()) return false;
  for (int v : va)
    if (a.black(v) != b.black(v) || a.red(v) != b.red(v) || a.bag(v) != b.bag(v))
      return false;
  return true;
}

Trigraph contract(const Trigraph& t, int u, int v, int z) {
  Trigraph out = t;
  out.contract_in_place(u, v, z);
  return out;
}

int red_degree(const Trigraph& t, int v) { return t.red_degree(v); }
int max_red_degree(const Trigraph& t) { return t.max_red_degree(); }

Trigraph quotient(const Graph& g, const Partition& p) {
  std::vector<int> ground(static_cast<std::size_t>(g.n()));
  std::iota(ground.begin(), ground.end(), 1);
  p.validate(ground);
  const int k = static_cast<int>(p.parts.size());
  std::vector<int> part_of(static_cast<std::size_t>(g.n()) + 1, 0);
  for (int i = 0; i < k; ++i)
    for (int v : p.parts[i]) part_of[v] = i + 1;

  Trigraph t = Trigraph::with_original_count(k);
  for (int i = 0; i < k; ++i) t.add_vertex(i + 1, p.parts[i]);
  // Count edges between every adjacent pair of parts.
  std::vector<std::vector<std::pair<int, long long>>> cnt(static_cast<std::size_t>(k) + 1);
  for (auto [a, b] : g.edges()) {
    int pa = part_of[a], pb = part_of[b];
    if (pa == pb) continue;
    if (pa > pb) std::swap(pa, pb);
    auto& row = cnt[pa];
    auto it = std::find_if(row.begin(), row.end(), [&](auto& e) { return e.first == pb; });
    if (it == row.end())
      row.emplace_back(pb, 1);
    else
      ++it->second;
  }
  for (int a = 1; a <= k; ++a)
    for (auto [b, c] : cnt[a]) {
      long long full = static_cast<long long>(p.parts[a - 1].size()) *
                       static_cast<long long>(p.parts[b - 1].size());
      t.set_edge(a, b, c == full ? EdgeKind::Black : EdgeKind::Red);
    }
  return t;
}

bool is_module(const Graph& g, const std::vector<int>& s,
               const std::vector<int>& relative_to) {
  std::vector<int> ss = s;
  std::sort(ss.begin(), ss.end());
  for (int x : relative_to)
    if (sorted_contains(ss, x)) throw PreconditionError("is_module: sets overlap");
  for (int x : relative_to) {
    std::size_t hits = 0;
    for (int y : ss)
      if (g.adjacent(x, y)) ++hits;
    if (hits != 0 && hits != ss.size()) return false;
  }
  return true;
}

}  // namespace tww
