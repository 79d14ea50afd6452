#include "tww/dpsolve.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace tww {

int check_component_bound(const Graph& g, const ContractionSequence& s) {
  int best = g.n() > 0 ? 1 : 0;
  replay_visit(Trigraph(g), s, [&](int, const Trigraph& t) {
    std::set<int> seen;
    for (int v : t.vertices()) {
      if (seen.count(v)) continue;
      std::vector<int> stack{v};
      seen.insert(v);
      int size = 0;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++size;
        for (int y : t.red(x))
          if (seen.insert(y).second) stack.push_back(y);
      }
      best = std::max(best, size);
    }
  });
  return best;
}

namespace {

// Per component vertex: 2 status bits (none, partial, full) and one
// "whole bag dominated" bit.
constexpr int kNone = 0, kPartial = 1, kFull = 2;
constexpr int kMaxComponent = 20;

using Key = std::uint64_t;

int status(Key k, int pos) { return static_cast<int>((k >> (3 * pos)) & 3); }
bool dominated(Key k, int pos) { return (k >> (3 * pos + 2)) & 1; }
Key encode(int st, bool dom, int pos) {
  return (static_cast<Key>(st) | (dom ? Key{4} : Key{0})) << (3 * pos);
}

struct Component {
  std::vector<int> verts;  // sorted
  std::unordered_map<Key, int> table;
};

class Solver {
 public:
  Solver(const Graph& g, const ContractionSequence& s, int c, bool ds)
      : t_(g), s_(s), c_(c), ds_(ds) {
    if (c < 1 || c > kMaxComponent)
      throw PreconditionError("component bound must lie in 1.." + std::to_string(kMaxComponent));
    if (s.n != g.n() || s.start != 0)
      throw SequenceError("sequence does not start from this graph");
  }

  int run() {
    if (t_.vertex_count() == 0) return 0;
    for (int v : t_.vertices()) {
      Component comp;
      comp.verts = {v};
      comp.table[encode(kNone, false, 0)] = 0;
      comp.table[encode(kFull, ds_, 0)] = 1;
      comp_of_[v] = next_;
      comps_[next_++] = std::move(comp);
    }
    int index = 0;
    for (const Step& st : s_.steps) {
      ++index;
      if (!t_.alive(st.u) || !t_.alive(st.v) || st.u == st.v)
        throw SequenceError("step " + std::to_string(index) + " contracts a dead or repeated id");
      if (st.z != t_.max_id() + 1)
        throw SequenceError("step " + std::to_string(index) + " expected fresh id " +
                            std::to_string(t_.max_id() + 1));
      step(st);
      if (static_cast<int>(comps_.at(comp_of_.at(st.z)).verts.size()) > c_)
        throw PreconditionError("red component above the bound after step " +
                                std::to_string(index));
    }
    std::set<int> rest;
    for (int v : t_.vertices()) rest.insert(comp_of_.at(v));
    int h = merge(std::vector<int>(rest.begin(), rest.end()));
    const Component& all = comps_.at(h);
    int best = INT_MAX;
    for (auto& [k, cost] : all.table) {
      bool ok = true;
      if (ds_)
        for (std::size_t i = 0; i < all.verts.size(); ++i) ok = ok && dominated(k, static_cast<int>(i));
      if (ok) best = std::min(best, cost);
    }
    return best;
  }

 private:
  void step(const Step& st) {
    std::set<int> hs{comp_of_.at(st.u), comp_of_.at(st.v)};
    std::set<int> nb;
    for (int w : {st.u, st.v}) {
      nb.insert(t_.black(w).begin(), t_.black(w).end());
      nb.insert(t_.red(w).begin(), t_.red(w).end());
    }
    for (int x : nb) {
      if (x == st.u || x == st.v) continue;
      EdgeKind a = t_.edge(st.u, x), b = t_.edge(st.v, x);
      if (a != b || a == EdgeKind::Red) hs.insert(comp_of_.at(x));
    }
    int h = merge(std::vector<int>(hs.begin(), hs.end()));
    Component& comp = comps_.at(h);
    const auto& vs = comp.verts;
    const int pu = static_cast<int>(std::find(vs.begin(), vs.end(), st.u) - vs.begin());
    const int pv = static_cast<int>(std::find(vs.begin(), vs.end(), st.v) - vs.begin());
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
      if (i != pu && i != pv) keep.push_back(i);
    Component out;
    for (int i : keep) out.verts.push_back(vs[i]);
    out.verts.push_back(st.z);  // z exceeds every live id
    const int pz = static_cast<int>(keep.size());
    for (auto& [k, cost] : comp.table) {
      Key nk = 0;
      for (int i = 0; i < pz; ++i) nk |= encode(status(k, keep[i]), dominated(k, keep[i]), i);
      const int su = status(k, pu), sv = status(k, pv);
      const int sz = su == kFull && sv == kFull ? kFull : su == kNone && sv == kNone ? kNone : kPartial;
      nk |= encode(sz, dominated(k, pu) && dominated(k, pv), pz);
      relax(out.table, nk, cost);
    }
    for (int v : out.verts) comp_of_[v] = h;
    comp_of_.erase(st.u);
    comp_of_.erase(st.v);
    comp = std::move(out);
    t_.contract_in_place(st.u, st.v, st.z);
  }

  static void relax(std::unordered_map<Key, int>& table, Key k, int cost) {
    auto [it, fresh] = table.emplace(k, cost);
    if (!fresh && cost < it->second) it->second = cost;
  }

  // Merges the listed components into the first handle and returns it.
  int merge(const std::vector<int>& hs) {
    int h = hs[0];
    for (std::size_t i = 1; i < hs.size(); ++i) {
      Component merged = merge_two(comps_.at(h), comps_.at(hs[i]));
      for (int v : comps_.at(hs[i]).verts) comp_of_[v] = h;
      comps_.erase(hs[i]);
      comps_[h] = std::move(merged);
    }
    return h;
  }

  // Edges between the two components are black or absent, hence resolved by
  // the statuses alone.
  Component merge_two(const Component& a, const Component& b) const {
    Component out;
    std::merge(a.verts.begin(), a.verts.end(), b.verts.begin(), b.verts.end(),
               std::back_inserter(out.verts));
    if (out.verts.size() > static_cast<std::size_t>(kMaxComponent) + 1)
      throw PreconditionError("merged component too large for the dynamic programme");
    auto where = [&](int v) {
      return static_cast<int>(std::lower_bound(out.verts.begin(), out.verts.end(), v) -
                              out.verts.begin());
    };
    std::vector<int> pa, pb;
    for (int v : a.verts) pa.push_back(where(v));
    for (int v : b.verts) pb.push_back(where(v));
    std::vector<std::pair<int, int>> black;  // positions in out
    for (std::size_t i = 0; i < a.verts.size(); ++i)
      for (std::size_t j = 0; j < b.verts.size(); ++j) {
        EdgeKind e = t_.edge(a.verts[i], b.verts[j]);
        if (e == EdgeKind::Red) throw PreconditionError("red edge between components");
        if (e == EdgeKind::Black) black.push_back({pa[i], pb[j]});
      }
    for (auto& [ka, ca] : a.table)
      for (auto& [kb, cb] : b.table) {
        Key k = 0;
        for (std::size_t i = 0; i < pa.size(); ++i)
          k |= encode(status(ka, static_cast<int>(i)), dominated(ka, static_cast<int>(i)), pa[i]);
        for (std::size_t j = 0; j < pb.size(); ++j)
          k |= encode(status(kb, static_cast<int>(j)), dominated(kb, static_cast<int>(j)), pb[j]);
        bool ok = true;
        for (auto [x, y] : black) {
          const int sx = status(k, x), sy = status(k, y);
          if (ds_) {
            if (sy != kNone) k |= encode(0, true, x);
            if (sx != kNone) k |= encode(0, true, y);
          } else if (sx != kFull && sy != kFull) {
            ok = false;
            break;
          }
        }
        if (ok) relax(out.table, k, ca + cb);
      }
    return out;
  }

  Trigraph t_;
  const ContractionSequence& s_;
  int c_;
  bool ds_;
  int next_ = 0;
  std::map<int, int> comp_of_;
  std::map<int, Component> comps_;
};

}  // namespace

int min_vc_dp(const Graph& g, const ContractionSequence& s, int c) {
  return Solver(g, s, c, false).run();
}

int min_ds_dp(const Graph& g, const ContractionSequence& s, int c) {
  return Solver(g, s, c, true).run();
}

}  // namespace tww
