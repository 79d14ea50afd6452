#include "tww/gadgets.hpp"

#include <algorithm>
#include <string>

namespace tww {

SnakingGrid snaking_grid(int s, int t) {
  if (s < 1 || t < 2)
    throw PreconditionError("snaking grid needs s >= 1 and t >= 2, got " + std::to_string(s) +
                            " x " + std::to_string(t));
  SnakingGrid sg{s, t, GridShape::of(s, t), Graph()};
  const GridShape& sh = sg.shape;
  const int nn = sh.rows, mm = sh.cols, nt = nn - 1, mt = mm - 1;
  Graph g(sh.size());
  auto link = [&](int i1, int j1, int i2, int j2) {
    g.add_edge_if_absent(sh.id({i1, j1}), sh.id({i2, j2}));
  };
  for (int i = 4; i <= nn; i += 3)
    for (int j = 1; j <= mt; j += 2) link(i, j, i, j + 1);
  for (int i = 3; i <= nt; i += 3)
    for (int j = 3; j <= mm; j += 2) link(i, j - 1, i, j);
  for (int j = 1; j <= mm; j += 3)
    for (int i = 1; i <= nt; ++i) link(i, j, i + 1, j);
  for (int j = 1; j <= mt; ++j) link(1, j, 1, j + 1);
  for (int i = 3; i <= nt; i += 3)
    for (int j = 1; j <= mm; ++j)
      if (j % 3 != 1) link(i, j, i + 1, j);
  sg.graph = std::move(g);
  return sg;
}

std::vector<FinePoint> hamiltonian_cycle(int p, int q) {
  if (p < 2 || q < 2) throw PreconditionError("hamiltonian cycle needs p, q >= 2");
  if (q % 2 != 0) throw PreconditionError("hamiltonian cycle needs an even q");
  const GridShape sh = GridShape::of(p, q);
  std::vector<FinePoint> out;
  out.reserve(static_cast<std::size_t>(sh.size()));
  for (int i = 1; i <= sh.rows; ++i) out.push_back({i, 1});
  for (int j = 2; j <= sh.cols; ++j) {
    if (j % 2 == 0)
      for (int i = sh.rows; i >= 2; --i) out.push_back({i, j});
    else
      for (int i = 2; i <= sh.rows; ++i) out.push_back({i, j});
  }
  for (int j = sh.cols; j >= 2; --j) out.push_back({1, j});
  return out;
}

Graph augmented_snaking_grid(int p, int q) {
  SnakingGrid sg = snaking_grid(p, q);
  Graph g = sg.graph;
  auto cyc = hamiltonian_cycle(p, q);
  for (std::size_t i = 0; i < cyc.size(); ++i)
    g.add_edge_if_absent(sg.shape.id(cyc[i]), sg.shape.id(cyc[(i + 1) % cyc.size()]));
  return g;
}

std::vector<PositionClass> classify_positions(int p, int q) {
  const GridShape sh = GridShape::of(p, q);
  const int nn = sh.rows, mm = sh.cols, nt = nn - 1;
  std::vector<PositionClass> out(static_cast<std::size_t>(sh.size()) + 1);
  for (int i = 1; i <= nn; ++i)
    for (int j = 1; j <= mm; ++j) {
      PositionClass c;
      if (j == 1 || j == mm) {
        c.color = (i % 3 == 1 && i != 1 && i != nn) ? PositionColor::Purple : PositionColor::Blue;
      } else if (i == 1) {
        c.color = j % 3 == 1 ? PositionColor::Purple : PositionColor::Blue;
      } else if (i == 2) {
        c.color = j % 3 == 1 ? PositionColor::Orange : PositionColor::Blue;
      } else if (i == nn) {
        c.color = PositionColor::Blue;
      } else if (i == nt) {
        c.color = PositionColor::Purple;
      } else if (i % 3 == 2) {
        c.color = PositionColor::Blue;
      } else {
        // Rows 3k+3 and 3k+4 form one snaking path, walked left to right;
        // even columns are entered from the top row.
        c.color = PositionColor::Path;
        c.layer = (i - 3) / 3;
        bool top = i % 3 == 1;
        bool first = (j % 2 == 0) == top;
        c.rank = 2 * (j - 2) + (first ? 0 : 1);
      }
      out[sh.id({i, j})] = c;
    }
  return out;
}

std::vector<FinePoint> merge_order(int p, int q) {
  const GridShape sh = GridShape::of(p, q);
  auto cls = classify_positions(p, q);
  auto cyc = hamiltonian_cycle(p, q);
  // Interior purples of the top snake row go after the oranges: with p = 2
  // that row sits right above the orange row.
  auto late_purple = [&](FinePoint y) {
    return y.row == sh.rows - 1 && y.col != 1 && y.col != sh.cols;
  };
  std::vector<FinePoint> out;
  for (FinePoint y : cyc)
    if (cls[sh.id(y)].color == PositionColor::Blue) out.push_back(y);
  for (FinePoint y : cyc)
    if (cls[sh.id(y)].color == PositionColor::Purple && !late_purple(y)) out.push_back(y);
  for (FinePoint y : cyc)
    if (cls[sh.id(y)].color == PositionColor::Orange) out.push_back(y);
  for (FinePoint y : cyc)
    if (cls[sh.id(y)].color == PositionColor::Purple && late_purple(y)) out.push_back(y);
  std::vector<FinePoint> path;
  for (FinePoint y : cyc)
    if (cls[sh.id(y)].color == PositionColor::Path) path.push_back(y);
  std::sort(path.begin(), path.end(), [&](FinePoint a, FinePoint b) {
    const auto& ca = cls[sh.id(a)];
    const auto& cb = cls[sh.id(b)];
    return std::pair(ca.layer, ca.rank) < std::pair(cb.layer, cb.rank);
  });
  out.insert(out.end(), path.begin(), path.end());
  return out;
}

HalfGraphCycle halfgraph_cycle(int layers, int height) {
  if (layers < 3 || height < 1)
    throw PreconditionError("half-graph cycle needs at least 3 layers and height >= 1");
  HalfGraphCycle hc{layers, height, Graph(layers * height), {}};
  auto id = [&](int p, int i) { return p * height + i; };
  for (int p = 0; p < layers; ++p)
    for (int i = 1; i <= height; ++i)
      for (int j = i + 1; j <= height; ++j) hc.graph.add_edge(id(p, i), id((p + 1) % layers, j));
  ContractionSequence& s = hc.sequence;
  s.n = layers * height;
  std::vector<int> cur(static_cast<std::size_t>(layers));
  for (int p = 0; p < layers; ++p) cur[p] = id(p, 1);
  for (int r = 2; r <= height; ++r)
    for (int p = 0; p < layers; ++p) cur[p] = s.push(cur[p], id(p, r));
  int c = cur[0];
  for (int p = 1; p < layers; ++p) c = s.push(c, cur[p]);
  return hc;
}

ContractionSequence grid_subdivision_collapse(const Trigraph& t,
                                              const std::map<int, FinePoint>& embedding) {
  std::vector<int> live = t.vertices();
  std::map<FinePoint, int> at;
  for (int v : live) {
    auto it = embedding.find(v);
    if (it == embedding.end())
      throw PreconditionError("grid collapse: vertex " + std::to_string(v) + " has no position");
    if (!at.emplace(it->second, v).second)
      throw PreconditionError("grid collapse: two vertices share a grid point");
  }
  for (int v : live) {
    const FinePoint pv = embedding.at(v);
    for (const auto* nb : {&t.black(v), &t.red(v)})
      for (int w : *nb)
        if (!grid_adjacent(pv, embedding.at(w)))
          throw PreconditionError("grid collapse: edge " + std::to_string(v) + " " +
                                  std::to_string(w) + " is not grid-adjacent");
  }

  ContractionSequence s{t.original_count(), t.max_id() - t.original_count(), {}};
  std::map<int, std::map<int, int>> by_col;  // col -> row -> id
  for (auto& [pt, v] : at) by_col[pt.col][pt.row] = v;
  std::map<int, int> rep;  // row -> id
  for (auto& [col, cells] : by_col)
    for (auto& [row, v] : cells) {
      auto it = rep.find(row);
      if (it == rep.end())
        rep[row] = v;
      else
        it->second = s.push(it->second, v);
    }
  int cur = 0;
  for (auto& [row, v] : rep) cur = cur == 0 ? v : s.push(cur, v);
  return s;
}

Wire build_wire(const std::vector<int>& parent) {
  const int k = static_cast<int>(parent.size());
  if (k == 0 || parent[0] != -1) throw PreconditionError("wire: gadget 0 must be the root");
  std::vector<int> outdeg(static_cast<std::size_t>(k), 0);
  for (int i = 1; i < k; ++i) {
    if (parent[i] < 0 || parent[i] >= i)
      throw PreconditionError("wire: parent of gadget " + std::to_string(i) + " must precede it");
    if (++outdeg[parent[i]] > 2) throw PreconditionError("wire: out-degree above 2");
  }
  Wire w;
  w.graph = Graph(3 + 5 * (k - 1));
  std::vector<int> tv(static_cast<std::size_t>(k)), fv(static_cast<std::size_t>(k));
  int next = 1;
  for (int i = 0; i < k; ++i) {
    int top = next++, bot = next++, d = next++;
    w.top.push_back(top);
    w.bot.push_back(bot);
    w.graph.add_edge(top, bot);
    w.graph.add_edge(top, d);
    w.graph.add_edge(bot, d);
    std::vector<int> part{top, bot, d};
    if (i > 0) {
      tv[i] = next++;
      fv[i] = next++;
      w.graph.add_edge(tv[i], top);
      w.graph.add_edge(fv[i], bot);
      part.push_back(tv[i]);
      part.push_back(fv[i]);
    }
    w.parts.push_back(std::move(part));
  }
  for (int i = 1; i < k; ++i) {
    w.graph.add_edge(w.top[parent[i]], fv[i]);
    w.graph.add_edge(w.bot[parent[i]], tv[i]);
  }
  return w;
}

}  // namespace tww
