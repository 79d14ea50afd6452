#include "tww/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>
#include <boost/dynamic_bitset.hpp>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

namespace tww {

int size_cap(int fallback) {
  if (const char* env = std::getenv("TWW_SIZE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return fallback;
}

namespace {

void check_cap(int n, int cap, int fallback, const char* what) {
  int limit = cap > 0 ? cap : size_cap(fallback);
  if (n > limit)
    throw SizeCapError(std::string(what) + ": " + std::to_string(n) +
                       " vertices exceeds the size cap of " + std::to_string(limit));
}

// ------------------------------------------------------------ twin-width

using Key = std::vector<std::uint64_t>;
struct KeyHash {
  std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
};

class TwinWidthSearch {
 public:
  TwinWidthSearch(int base) : next_(base + 1) {}

  bool run(const Trigraph& t, const std::vector<std::uint64_t>& masks, int d) {
    d_ = d;
    failed_.clear();
    path_.clear();
    mask_ = masks;
    Trigraph copy = t;
    return dfs(copy, next_);
  }
  const std::vector<Step>& path() const { return path_; }

 private:
  Key key(const Trigraph& t) const {
    Key k;
    for (int v : t.vertices()) k.push_back(mask_[v]);
    std::sort(k.begin(), k.end());
    return k;
  }

  void set_mask(int z, std::uint64_t m) {
    if (z >= static_cast<int>(mask_.size())) mask_.resize(static_cast<std::size_t>(z) + 1, 0);
    mask_[z] = m;
  }

  bool same_type(const Trigraph& t, const std::vector<int>& vs, int u, int v) const {
    for (int x : vs)
      if (x != u && x != v && t.edge(u, x) != t.edge(v, x)) return false;
    return true;
  }

  bool within(const Trigraph& t, int z) const {
    if (t.red_degree(z) > d_) return false;
    for (int x : t.red(z))
      if (t.red_degree(x) > d_) return false;
    return true;
  }

  bool dfs(Trigraph& t, int z) {
    std::vector<int> vs = t.vertices();
    if (static_cast<int>(vs.size()) <= d_ + 1) {
      // Any order works: red degree never exceeds the live count minus one.
      while (vs.size() > 1) {
        path_.push_back({z, vs[0], vs[1]});
        t.contract_in_place(vs[0], vs[1], z);
        vs = t.vertices();
        ++z;
      }
      return true;
    }
    Key k = key(t);
    if (failed_.count(k)) return false;

    // Twins: the result is the induced subtrigraph minus v, so no branching.
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (same_type(t, vs, vs[i], vs[j])) {
          int u = vs[i], v = vs[j];
          Trigraph next = t;
          next.contract_in_place(u, v, z);
          set_mask(z, mask_[u] | mask_[v]);
          path_.push_back({z, u, v});
          if (within(next, z) && dfs(next, z + 1)) return true;
          path_.pop_back();
          failed_.insert(std::move(k));
          return false;
        }

    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        int u = vs[i], v = vs[j];
        Trigraph next = t;
        next.contract_in_place(u, v, z);
        if (!within(next, z)) continue;
        set_mask(z, mask_[u] | mask_[v]);
        path_.push_back({z, u, v});
        if (dfs(next, z + 1)) return true;
        path_.pop_back();
      }
    failed_.insert(std::move(k));
    return false;
  }

  int d_ = 0;
  int next_;
  std::vector<std::uint64_t> mask_;
  std::vector<Step> path_;
  std::unordered_set<Key, KeyHash> failed_;
};

// ------------------------------------------------------- dominating set

using Bits = boost::dynamic_bitset<>;

class DominatingSearch {
 public:
  DominatingSearch(const Graph& g, const std::optional<Partition>& forced)
      : n_(g.n()), closed_(static_cast<std::size_t>(n_), Bits(static_cast<std::size_t>(n_))),
        part_of_(static_cast<std::size_t>(n_), -1) {
    for (int v = 1; v <= n_; ++v) {
      closed_[v - 1].set(v - 1);
      for (int w : g.neighbors(v)) closed_[v - 1].set(w - 1);
    }
    if (forced) {
      std::vector<int> ground(static_cast<std::size_t>(n_));
      for (int v = 1; v <= n_; ++v) ground[v - 1] = v;
      forced->validate(ground);
      for (const auto& p : forced->parts) {
        Bits b(static_cast<std::size_t>(n_));
        for (int v : p) {
          b.set(v - 1);
          part_of_[v - 1] = static_cast<int>(parts_.size());
        }
        parts_.push_back(std::move(b));
      }
    }
  }

  int lower_bound() {
    reset();
    return bound(std::max<int>(static_cast<int>(parts_.size()), n_));
  }

  // Searches for sets of size <= k; stops at the first unless `all`.
  void run(int k, bool all) {
    reset();
    all_ = all;
    done_ = false;
    found_.clear();
    search(k);
  }
  const std::vector<std::vector<int>>& found() const { return found_; }

 private:
  void reset() {
    dom_ = Bits(static_cast<std::size_t>(n_));
    forbidden_ = Bits(static_cast<std::size_t>(n_));
    hit_.assign(parts_.size(), 0);
    unhit_ = static_cast<int>(parts_.size());
    chosen_.clear();
  }

  Bits unhit_region() const {
    Bits r(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (!hit_[i]) r |= parts_[i];
    return r;
  }

  Bits allowed(int budget) const {
    Bits a = ~forbidden_;
    if (!parts_.empty() && budget == unhit_) a &= unhit_region();
    return a;
  }

  // Lower bound on further picks; returns budget+1 on dead ends.
  int bound(int budget) const {
    Bits a = allowed(budget);
    Bits used(static_cast<std::size_t>(n_));
    Bits used2 = unhit_region() & a;
    int pack = 0, pack2 = 0;
    for (std::size_t u = 0; u < dom_.size(); ++u) {
      if (dom_.test(u)) continue;
      Bits c = closed_[u] & a;
      if (c.none()) return budget + 1;
      if (!c.intersects(used)) {
        ++pack;
        used |= c;
      }
      if (!c.intersects(used2)) {
        ++pack2;
        used2 |= c;
      }
    }
    return std::max(pack, unhit_ + pack2);
  }

  void search(int budget) {
    if (done_) return;
    if (dom_.all() && unhit_ == 0) {
      std::vector<int> s = chosen_;
      std::sort(s.begin(), s.end());
      found_.push_back(std::move(s));
      if (!all_) done_ = true;
      return;
    }
    if (budget <= 0 || budget < unhit_) return;
    if (bound(budget) > budget) return;

    const bool tight = !parts_.empty() && budget == unhit_;
    Bits a = allowed(budget);
    Bits best;
    std::size_t best_count = Bits::npos;
    auto offer = [&](Bits c) {
      std::size_t cnt = c.count();
      if (cnt < best_count) {
        best_count = cnt;
        best = std::move(c);
      }
    };
    for (std::size_t u = 0; u < dom_.size() && best_count > 1; ++u)
      if (!dom_.test(u)) offer(closed_[u] & a);
    for (std::size_t i = 0; i < parts_.size() && best_count > 1; ++i) {
      if (hit_[i]) continue;
      Bits c = parts_[i] & a;
      if (tight) {
        // The single pick of this part must dominate everything confined to it.
        for (std::size_t u = 0; u < dom_.size(); ++u) {
          if (dom_.test(u)) continue;
          Bits cu = closed_[u] & a;
          if (cu.is_subset_of(parts_[i])) c &= cu;
        }
      }
      offer(std::move(c));
    }
    if (best_count == 0) return;

    std::vector<std::size_t> branch;
    for (std::size_t c = best.find_first(); c != Bits::npos; c = best.find_next(c))
      branch.push_back(c);
    for (std::size_t c : branch) {
      Bits saved = dom_;
      dom_ |= closed_[c];
      int p = part_of_[c];
      bool newly = p >= 0 && !hit_[p];
      if (newly) {
        hit_[p] = 1;
        --unhit_;
      }
      forbidden_.set(c);
      chosen_.push_back(static_cast<int>(c) + 1);
      search(budget - 1);
      chosen_.pop_back();
      if (newly) {
        hit_[p] = 0;
        ++unhit_;
      }
      dom_ = std::move(saved);
      if (done_) break;
    }
    for (std::size_t c : branch) forbidden_.reset(c);
  }

  int n_;
  std::vector<Bits> closed_;
  std::vector<int> part_of_;
  std::vector<Bits> parts_;
  Bits dom_, forbidden_;
  std::vector<char> hit_;
  int unhit_ = 0;
  std::vector<int> chosen_;
  bool all_ = false, done_ = false;
  std::vector<std::vector<int>> found_;
};

template <class F>
void for_each_subset_by_size(int n, int max_size, F&& f) {
  if (n > 62) throw SizeCapError("subset enumeration supports at most 62 vertices");
  // Gosper's hack over masks of each popcount; f returns true to stop.
  for (int s = 0; s <= std::min(n, max_size); ++s) {
    if (s == 0) {
      if (f(std::uint64_t{0})) return;
      continue;
    }
    std::uint64_t m = (std::uint64_t{1} << s) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (m < limit) {
      if (f(m)) return;
      std::uint64_t c = m & -m, r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
}

std::vector<int> mask_to_set(std::uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

}  // namespace

TwinWidthResult exact_twinwidth(const Graph& g, int cap) {
  return exact_twinwidth(Trigraph(g), cap);
}

TwinWidthResult exact_twinwidth(const Trigraph& t, int cap) {
  const int n = t.vertex_count();
  check_cap(n, cap, kTwinWidthCap, "exact_twinwidth");
  if (n > 64) throw SizeCapError("exact_twinwidth: at most 64 vertices are supported");
  TwinWidthResult res;
  res.sequence.n = t.original_count();
  res.sequence.start = t.max_id() - t.original_count();
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(t.max_id()) + 1, 0);
  int i = 0;
  for (int v : t.vertices()) masks[v] = std::uint64_t{1} << i++;
  TwinWidthSearch search(t.max_id());
  for (int d = t.max_red_degree();; ++d) {
    if (search.run(t, masks, d)) {
      res.width = d;
      res.sequence.steps = search.path();
      return res;
    }
  }
}

bool is_dominating_set(const Graph& g, const std::vector<int>& s) {
  std::vector<char> dom(static_cast<std::size_t>(g.n()) + 1, 0);
  for (int v : s) {
    if (!g.has_vertex(v)) return false;
    dom[v] = 1;
    for (int w : g.neighbors(v)) dom[w] = 1;
  }
  for (int v = 1; v <= g.n(); ++v)
    if (!dom[v]) return false;
  return true;
}

std::optional<std::vector<int>> find_dominating_set(const Graph& g, int k,
                                                    const std::optional<Partition>& forced,
                                                    int cap) {
  check_cap(g.n(), cap, kSearchCap, "find_dominating_set");
  DominatingSearch s(g, forced);
  s.run(k, false);
  if (s.found().empty()) return std::nullopt;
  return s.found().front();
}

SetResult min_dominating_set(const Graph& g, const std::optional<Partition>& forced, int cap) {
  check_cap(g.n(), cap, kSearchCap, "min_dominating_set");
  DominatingSearch s(g, forced);
  for (int k = s.lower_bound();; ++k) {
    s.run(k, false);
    if (!s.found().empty()) return {k, s.found().front()};
  }
}

std::vector<std::vector<int>> all_min_dominating_sets(const Graph& g,
                                                      const std::optional<Partition>& forced,
                                                      int cap) {
  SetResult best = min_dominating_set(g, forced, cap);
  DominatingSearch s(g, forced);
  s.run(best.size, true);
  auto out = s.found();
  std::sort(out.begin(), out.end());
  return out;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in(static_cast<std::size_t>(g.n()) + 1, 0);
  for (int v : s)
    if (g.has_vertex(v)) in[v] = 1;
  for (auto [a, b] : g.edges())
    if (!in[a] && !in[b]) return false;
  return true;
}

SetResult min_vertex_cover(const Graph& g, int cap) {
  check_cap(g.n(), cap, kSearchCap, "min_vertex_cover");
  const int n = g.n();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : g.edges()) {
    adj[a - 1] |= std::uint64_t{1} << (b - 1);
    adj[b - 1] |= std::uint64_t{1} << (a - 1);
  }
  SetResult best;
  for_each_subset_by_size(n, n, [&](std::uint64_t m) {
    for (int v = 0; v < n; ++v)
      if (!(m >> v & 1) && (adj[v] & ~m)) return false;
    best.set = mask_to_set(m);
    best.size = static_cast<int>(best.set.size());
    return true;
  });
  return best;
}

std::optional<SetResult> min_connected_vertex_cover(const Graph& g, int cap) {
  check_cap(g.n(), cap, kSearchCap, "min_connected_vertex_cover");
  int edge_components = 0;
  for (const auto& c : g.components())
    if (c.size() > 1) ++edge_components;
  if (edge_components > 1) return std::nullopt;
  const int n = g.n();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : g.edges()) {
    adj[a - 1] |= std::uint64_t{1} << (b - 1);
    adj[b - 1] |= std::uint64_t{1} << (a - 1);
  }
  std::optional<SetResult> best;
  for_each_subset_by_size(n, n, [&](std::uint64_t m) {
    for (int v = 0; v < n; ++v)
      if (!(m >> v & 1) && (adj[v] & ~m)) return false;
    if (m) {
      std::uint64_t reach = m & -m, frontier = reach;
      while (frontier) {
        std::uint64_t nxt = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) nxt |= adj[std::countr_zero(f)];
        nxt &= m & ~reach;
        reach |= nxt;
        frontier = nxt;
      }
      if (reach != m) return false;
    }
    auto s = mask_to_set(m);
    best = SetResult{static_cast<int>(s.size()), s};
    return true;
  });
  return best;
}

bool capacitated_vc_feasible(const CapacitatedGraph& cg, const std::vector<int>& x) {
  const Graph& g = cg.graph;
  if (!is_vertex_cover(g, x)) return false;
  auto edges = g.edges();
  if (edges.empty()) return true;

  using namespace boost;
  using Traits = adjacency_list_traits<vecS, vecS, directedS>;
  using FlowGraph =
      adjacency_list<vecS, vecS, directedS, no_property,
                     property<edge_capacity_t, long,
                              property<edge_residual_capacity_t, long,
                                       property<edge_reverse_t, Traits::edge_descriptor>>>>;
  const int m = static_cast<int>(edges.size());
  // 0 = source, 1..m = edges, m+v = vertex v, m+n+1 = sink.
  FlowGraph fg(static_cast<std::size_t>(m + g.n() + 2));
  auto capm = get(edge_capacity, fg);
  auto rev = get(edge_reverse, fg);
  auto link = [&](int a, int b, long c) {
    auto e1 = add_edge(a, b, fg).first;
    auto e2 = add_edge(b, a, fg).first;
    capm[e1] = c;
    capm[e2] = 0;
    rev[e1] = e2;
    rev[e2] = e1;
  };
  std::vector<char> in(static_cast<std::size_t>(g.n()) + 1, 0);
  for (int v : x) in[v] = 1;
  const int sink = m + g.n() + 1;
  for (int i = 0; i < m; ++i) {
    link(0, i + 1, 1);
    for (int end : {edges[i].first, edges[i].second})
      if (in[end]) link(i + 1, m + end, 1);
  }
  for (int v = 1; v <= g.n(); ++v)
    if (in[v]) link(m + v, sink, std::max(0, cg.cap[v]));
  long flow = push_relabel_max_flow(fg, 0, sink);
  return flow == m;
}

std::optional<std::vector<int>> min_capacitated_vc(const CapacitatedGraph& cg, int k, int cap) {
  const Graph& g = cg.graph;
  check_cap(g.n(), cap, kSearchCap, "min_capacitated_vc");
  std::optional<std::vector<int>> best;
  for_each_subset_by_size(g.n(), k, [&](std::uint64_t m) {
    auto s = mask_to_set(m);
    if (!capacitated_vc_feasible(cg, s)) return false;
    best = std::move(s);
    return true;
  });
  return best;
}

}  // namespace tww
