#include "tww/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "tww/modular.hpp"

namespace tww {

std::vector<int> two_approx_vc(const Graph& g) {
  std::vector<char> matched(static_cast<std::size_t>(g.n()) + 1, 0);
  std::vector<int> out;
  for (auto [a, b] : g.edges())
    if (!matched[a] && !matched[b]) {
      matched[a] = matched[b] = 1;
      out.push_back(a);
      out.push_back(b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Vertex deletions on a fixed input graph; classes are recomputed on demand.
class Workbench {
 public:
  explicit Workbench(const Graph& g) : g_(g), alive_(static_cast<std::size_t>(g.n()) + 1, 1) {
    alive_[0] = 0;
  }

  bool alive(int v) const { return alive_[v]; }
  void erase(int v) { alive_[v] = 0; }

  int outside_degree(int x, const std::vector<char>& in_x) const {
    int d = 0;
    for (int w : g_.neighbors(x))
      if (alive_[w] && !in_x[w]) ++d;
    return d;
  }

  // Alive vertices outside X grouped by N(v) ∩ X, lexicographic by trace.
  std::vector<TraceClass> classes(const std::vector<int>& x) const {
    auto [h, orig] = current();
    std::vector<int> pos(static_cast<std::size_t>(g_.n()) + 1, 0);
    for (int i = 1; i <= h.n(); ++i) pos[orig[i]] = i;
    std::vector<int> hx;
    for (int v : x)
      if (alive_[v]) hx.push_back(pos[v]);
    auto cls = trace_class_list(h, hx);
    for (auto& c : cls) {
      for (int& v : c.trace) v = orig[v];
      for (int& v : c.members) v = orig[v];
      std::sort(c.trace.begin(), c.trace.end());
    }
    std::sort(cls.begin(), cls.end(),
              [](const TraceClass& a, const TraceClass& b) { return a.trace < b.trace; });
    return cls;
  }

  std::pair<Graph, std::vector<int>> current() const {
    std::vector<int> keep;
    for (int v = 1; v <= g_.n(); ++v)
      if (alive_[v]) keep.push_back(v);
    std::vector<int> orig{0};
    orig.insert(orig.end(), keep.begin(), keep.end());
    return {g_.induced(keep), orig};
  }

  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
  std::vector<char> alive_;
};

KernelInstance finish(const Workbench& wb, KernelInstance ki) {
  auto [h, orig] = wb.current();
  ki.graph = std::move(h);
  ki.orig = std::move(orig);
  return ki;
}

KernelInstance two_edge_no(int k, std::vector<int> vc, std::vector<RuleRecord> trace = {}) {
  KernelInstance ki;
  ki.trivial_no = true;
  ki.graph = Graph(4);
  ki.graph.add_edge(1, 2);
  ki.graph.add_edge(3, 4);
  ki.orig = {0, 0, 0, 0, 0};
  ki.k = k;
  ki.vc = std::move(vc);
  ki.trace = std::move(trace);
  return ki;
}

std::vector<char> membership(int n, const std::vector<int>& x) {
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  for (int v : x) in[v] = 1;
  return in;
}

}  // namespace

KernelInstance cvc_kernel_quadratic(const Graph& g, int k) {
  auto x = two_approx_vc(g);
  if (static_cast<int>(x.size()) >= 2 * k + 1) return two_edge_no(k, x);
  Workbench wb(g);
  KernelInstance ki;
  ki.k = k;
  ki.vc = x;
  for (const auto& c : wb.classes(x))
    for (std::size_t i = c.members.size(); i > static_cast<std::size_t>(k) + 1; --i) {
      int v = c.members[i - 1];
      wb.erase(v);
      ki.trace.push_back({1, v, c.trace});
    }
  return finish(wb, std::move(ki));
}

KernelInstance capvc_kernel(const CapacitatedGraph& cg, int k) {
  const Graph& g = cg.graph;
  auto x = two_approx_vc(g);
  if (static_cast<int>(x.size()) >= 2 * k + 1) {
    KernelInstance ki;
    ki.trivial_no = true;
    ki.graph = Graph(2);
    ki.graph.add_edge(1, 2);
    ki.orig = {0, 0, 0};
    ki.cap = {0, 0, 0};
    ki.k = k;
    ki.vc = x;
    return ki;
  }
  Workbench wb(g);
  std::vector<int> cap = cg.cap;
  KernelInstance ki;
  ki.k = k;
  ki.vc = x;
  for (const auto& c : wb.classes(x)) {
    std::vector<int> members = c.members;
    while (static_cast<int>(members.size()) > k + 1) {
      // Minimum current capacity, ties to the largest id.
      auto it = std::min_element(members.begin(), members.end(), [&](int a, int b) {
        return cap[a] != cap[b] ? cap[a] < cap[b] : a > b;
      });
      int s = *it;
      members.erase(it);
      wb.erase(s);
      for (int w : g.neighbors(s))
        if (wb.alive(w)) --cap[w];
      ki.trace.push_back({2, s, c.trace});
    }
  }
  ki = finish(wb, std::move(ki));
  ki.cap.assign(ki.orig.size(), 0);
  for (std::size_t i = 1; i < ki.orig.size(); ++i) ki.cap[i] = cap[ki.orig[i]];
  return ki;
}

KernelInstance cvc_kernel_improved(const Graph& g, int k) {
  Workbench wb(g);
  std::vector<RuleRecord> stripped;
  for (int v = 1; v <= g.n(); ++v)
    if (g.degree(v) == 0) {
      wb.erase(v);
      stripped.push_back({0, v, {}});
    }
  auto x = two_approx_vc(g);
  {
    int edge_components = 0;
    for (const auto& c : g.components())
      if (c.size() > 1) ++edge_components;
    if (edge_components > 1) return two_edge_no(k, x, stripped);
  }
  if (static_cast<int>(x.size()) >= 2 * k + 1) return two_edge_no(k, x, stripped);

  KernelInstance ki;
  ki.k = k;
  ki.vc = x;
  ki.trace = std::move(stripped);
  const auto in_x = membership(g.n(), x);
  for (;;) {
    // X^s is re-read on the current graph before every application.
    std::vector<char> small(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int v : x) small[v] = wb.outside_degree(v, in_x) <= k;
    bool applied = false;
    for (const auto& c : wb.classes(x)) {
      int xi = 0;
      for (int v : c.trace) xi += small[v];
      if (xi > 0 && static_cast<int>(c.members.size()) >= xi + 2) {
        int y = c.members.back();
        wb.erase(y);
        ki.trace.push_back({3, y, c.trace});
        applied = true;
        break;
      }
    }
    if (!applied) break;
  }
  return finish(wb, std::move(ki));
}

std::vector<int> small_side(const Graph& g, const std::vector<int>& x, int k) {
  auto in = membership(g.n(), x);
  std::vector<int> out;
  for (int v : x) {
    int d = 0;
    for (int w : g.neighbors(v)) d += !in[w];
    if (d <= k) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool rule1_applicable(const Graph& g, const std::vector<int>& x, int k) {
  for (const auto& c : trace_class_list(g, x))
    if (static_cast<int>(c.members.size()) > k + 1) return true;
  return false;
}

namespace {

int xi_size(const TraceClass& c, const std::vector<int>& small) {
  int xi = 0;
  for (int v : c.trace) xi += std::binary_search(small.begin(), small.end(), v);
  return xi;
}

}  // namespace

bool rule3_applicable(const Graph& g, const std::vector<int>& x, int k) {
  auto small = small_side(g, x, k);
  for (const auto& c : trace_class_list(g, x)) {
    int xi = xi_size(c, small);
    if (xi > 0 && static_cast<int>(c.members.size()) >= xi + 2) return true;
  }
  return false;
}

bool improved_size_bound_holds(const Graph& g, const std::vector<int>& x, int k) {
  auto small = small_side(g, x, k);
  long long y = 0, q = 0;
  for (const auto& c : trace_class_list(g, x))
    if (xi_size(c, small) > 0) {
      y += static_cast<long long>(c.members.size());
      ++q;
    }
  return (y - q) * (y - q) <= q * k * static_cast<long long>(small.size());
}

std::vector<int> kernel_vc(const KernelInstance& ki) {
  std::vector<int> out;
  for (std::size_t i = 1; i < ki.orig.size(); ++i)
    if (std::binary_search(ki.vc.begin(), ki.vc.end(), ki.orig[i]))
      out.push_back(static_cast<int>(i));
  return out;
}

TraceCountReport trace_count(const Graph& g, const std::vector<int>& x) {
  TraceCountReport r;
  r.x_size = static_cast<int>(x.size());
  r.class_count = static_cast<int>(trace_class_list(g, x).size());
  r.ratio = r.x_size == 0 ? 0.0 : static_cast<double>(r.class_count) / r.x_size;
  return r;
}

double trace_constant(int t) {
  return 8.0 / 3.0 * (t + 1) * (t + 1) * std::pow(2.0, 4.0 * t);
}

}  // namespace tww
