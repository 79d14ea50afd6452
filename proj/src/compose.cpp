#include "tww/compose.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tww/gadgets.hpp"

namespace tww {

AnnotatedInstance make_dummy(int N, int p, int q) {
  auto cyc = hamiltonian_cycle(p, q);
  if (static_cast<int>(cyc.size()) != N)
    throw PreconditionError("dummy: N = " + std::to_string(N) + " does not match a " +
                            std::to_string(p) + " x " + std::to_string(q) + " snaking grid");
  AnnotatedInstance d;
  d.graph = Graph(2 * N);
  d.p = p;
  d.q = q;
  d.witness.n = 2 * N;
  for (int j = 0; j < N; ++j) {
    d.parts.push_back({2 * j + 1, 2 * j + 2});
    d.eta.push_back(cyc[j]);
    d.witness.push(2 * j + 1, 2 * j + 2);
  }
  return d;
}

Partition ComposedInstance::forced_parts() const {
  Partition out;
  for (int j = 1; j <= N; ++j) {
    std::vector<int> part;
    for (int row = 1; row <= t; ++row)
      part.insert(part.end(), cell(row, j).begin(), cell(row, j).end());
    const auto& d = cell(t + 1, j % N + 1);
    part.insert(part.end(), d.begin(), d.end());
    out.parts.push_back(std::move(part));
  }
  return out;
}

bool ComposedInstance::half_graph_pair(int u, int v) const {
  const Provenance& a = provenance[u];
  const Provenance& b = provenance[v];
  if (a.row < b.row) return b.part == a.part % N + 1;
  if (b.row < a.row) return a.part == b.part % N + 1;
  return false;
}

ComposedInstance or_cross_compose(const std::vector<AnnotatedInstance>& instances) {
  if (instances.empty()) throw PreconditionError("compose needs at least one instance");
  const int N = instances[0].N(), p = instances[0].p, q = instances[0].q;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& in = instances[i];
    if (in.N() != N || in.p != p || in.q != q)
      throw PreconditionError("instance " + std::to_string(i + 1) +
                              " has different (N, p, q) from instance 1");
    InstanceReport rep = validate_instance(in);
    if (!rep.ok())
      throw PreconditionError("instance " + std::to_string(i + 1) + " is invalid: " + rep.error);
  }
  const auto cyc = hamiltonian_cycle(p, q);
  if (static_cast<int>(cyc.size()) != N)
    throw PreconditionError("N does not match the snaking grid dimensions");
  std::map<FinePoint, int> pos;  // grid point -> 0-based cycle index
  for (int j = 0; j < N; ++j) pos[cyc[j]] = j;

  std::vector<AnnotatedInstance> rows(instances);
  rows.push_back(make_dummy(N, p, q));

  ComposedInstance out;
  out.N = N;
  out.p = p;
  out.q = q;
  out.t = static_cast<int>(instances.size());
  const int R = out.t + 1;

  std::vector<int> offset(R + 1, 0);
  for (int i = 0; i < R; ++i) offset[i + 1] = offset[i] + rows[i].graph.n();
  const int total = offset[R];
  Graph h(total);
  out.cells.assign(static_cast<std::size_t>(R) * N, {});
  out.provenance.assign(static_cast<std::size_t>(total) + 1, {});
  for (int i = 0; i < R; ++i) {
    const auto& in = rows[i];
    for (auto [u, v] : in.graph.edges()) h.add_edge(offset[i] + u, offset[i] + v);
    for (int k = 0; k < N; ++k) {
      const int j = pos.at(in.eta[k]);
      auto& c = out.cells[static_cast<std::size_t>(i) * N + j];
      for (int v : in.parts[k]) {
        c.push_back(offset[i] + v);
        out.provenance[offset[i] + v] = {i + 1, j + 1};
      }
      std::sort(c.begin(), c.end());
    }
  }
  // B_{i,j} is complete to every B_{l,j+1} with l > i.
  for (int i = 1; i <= R; ++i)
    for (int j = 1; j <= N; ++j)
      for (int l = i + 1; l <= R; ++l)
        for (int a : out.cell(i, j))
          for (int b : out.cell(l, j % N + 1)) h.add_edge(a, b);
  out.graph = h;

  // Stage 1: every row's own partial sequence, relabelled.
  ContractionSequence& s = out.witness;
  s.n = total;
  std::vector<std::vector<int>> rep(R + 1, std::vector<int>(N + 1, 0));
  for (int i = 0; i < R; ++i) {
    const auto& in = rows[i];
    const int n = in.witness.n;
    std::vector<int> id(static_cast<std::size_t>(n) + in.witness.steps.size() + 1, 0);
    std::vector<int> cur(static_cast<std::size_t>(n) + 1);  // original -> live local id
    std::vector<std::vector<int>> members(id.size());
    for (int v = 1; v <= n; ++v) {
      id[v] = offset[i] + v;
      cur[v] = v;
      members[v] = {v};
    }
    for (const Step& st : in.witness.steps) {
      id[st.z] = s.push(id[st.u], id[st.v]);
      members[st.z] = std::move(members[st.u]);
      members[st.z].insert(members[st.z].end(), members[st.v].begin(), members[st.v].end());
      for (int v : members[st.z]) cur[v] = st.z;
    }
    for (int k = 0; k < N; ++k)
      rep[i + 1][pos.at(in.eta[k]) + 1] = id[cur[in.parts[k][0]]];
  }
  out.stage_steps[0] = static_cast<int>(s.steps.size());

  // Stage 2: fold rows bottom-up, contracting homologous pairs in merge order.
  const GridShape sh = GridShape::of(p, q);
  const Graph aug = augmented_snaking_grid(p, q);
  const auto order = merge_order(p, q);
  std::vector<int> low = rep[1];
  for (int i = 2; i <= R; ++i) {
    std::vector<char> done(static_cast<std::size_t>(sh.size()) + 1, 0);
    for (FinePoint y : order) {
      MergeCheck mc{i - 1, y, 0, 0};
      for (int w : aug.neighbors(sh.id(y))) (done[w] ? mc.contracted : mc.pending)++;
      out.max_c2p = std::max(out.max_c2p, mc.contracted + 2 * mc.pending);
      out.merges.push_back(mc);
      const int j = pos.at(y) + 1;
      low[j] = s.push(low[j], rep[i][j]);
      done[sh.id(y)] = 1;
    }
  }
  out.stage_steps[1] = static_cast<int>(s.steps.size()) - out.stage_steps[0];

  // Stage 3: the remaining red grid.
  Trigraph mid = final_trigraph(Trigraph(h), s);
  std::map<int, FinePoint> emb;
  for (int j = 1; j <= N; ++j) emb[low[j]] = cyc[j - 1];
  ContractionSequence tail = grid_subdivision_collapse(mid, emb);
  s = concat(s, tail);
  out.stage_steps[2] = static_cast<int>(tail.steps.size());
  return out;
}

}  // namespace tww
