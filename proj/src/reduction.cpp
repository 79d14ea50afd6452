#include "tww/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace tww {

// ------------------------------------------------------------ validator

InstanceReport validate_instance(const AnnotatedInstance& inst) {
  InstanceReport r;
  const Graph& g = inst.graph;
  std::vector<int> ground(static_cast<std::size_t>(g.n()));
  std::iota(ground.begin(), ground.end(), 1);
  Partition part{inst.parts};
  try {
    part.validate(ground);
  } catch (const PreconditionError& e) {
    r.error = e.what();
    return r;
  }
  if (inst.p < 1 || inst.q < 2) {
    r.error = "snaking grid dimensions out of range";
    return r;
  }
  const GridShape sh = GridShape::of(inst.p, inst.q);
  if (inst.eta.size() != inst.parts.size() || inst.N() != sh.size()) {
    r.error = "eta must map the " + std::to_string(inst.N()) + " parts onto the " +
              std::to_string(sh.size()) + " snaking grid points";
    return r;
  }
  std::vector<char> seen(static_cast<std::size_t>(sh.size()) + 1, 0);
  for (FinePoint pt : inst.eta) {
    if (!sh.contains(pt) || seen[sh.id(pt)]) {
      r.error = "eta is not a bijection onto the snaking grid";
      return r;
    }
    seen[sh.id(pt)] = 1;
  }
  r.partition_ok = true;

  SnakingGrid sg = snaking_grid(inst.p, inst.q);
  Trigraph quo = quotient(g, part);
  r.spanning_ok = true;
  for (int a : quo.vertices()) {
    for (const auto* nb : {&quo.black(a), &quo.red(a)})
      for (int b : *nb)
        if (!sg.graph.adjacent(sh.id(inst.eta[a - 1]), sh.id(inst.eta[b - 1]))) {
          r.spanning_ok = false;
          r.error = "parts " + std::to_string(a) + " and " + std::to_string(b) +
                    " are adjacent but their grid points are not";
        }
  }

  try {
    Trigraph fin = final_trigraph(Trigraph(g), inst.witness);
    std::set<std::vector<int>> bags, want;
    for (int v : fin.vertices()) bags.insert(fin.bag(v));
    for (auto p : inst.parts) {
      std::sort(p.begin(), p.end());
      want.insert(std::move(p));
    }
    r.witness_ok = bags == want;
    if (!r.witness_ok && r.error.empty()) r.error = "witness does not end at the quotient";
    WidthReport w = verify(g, inst.witness, 4);
    r.width = w.width;
    r.width_ok = !w.violation;
  } catch (const std::exception& e) {
    r.error = std::string("witness: ") + e.what();
  }

  r.confined_ok = true;
  for (const auto& p : inst.parts) {
    std::vector<int> sp = p;
    std::sort(sp.begin(), sp.end());
    bool found = false;
    for (int v : sp) {
      bool inside = true;
      for (int w : g.neighbors(v))
        if (!std::binary_search(sp.begin(), sp.end(), w)) {
          inside = false;
          break;
        }
      if (inside) {
        found = true;
        break;
      }
    }
    if (!found) {
      r.confined_ok = false;
      if (r.error.empty()) r.error = "a part has no vertex with its closed neighbourhood inside";
    }
  }
  return r;
}

// -------------------------------------------------------------- formulas

namespace {

std::array<int, 3> sorted_vars(const std::array<int, 3>& lits) {
  std::array<int, 3> v{std::abs(lits[0]), std::abs(lits[1]), std::abs(lits[2])};
  std::sort(v.begin(), v.end());
  return v;
}

bool removable(const std::array<int, 3>& v, const std::vector<int>& uses) {
  for (int x = v[0] + 1; x < v[2]; ++x)
    if (x != v[1] && uses[x] > 0) return false;
  return uses[v[1]] == 1;
}

}  // namespace

std::optional<std::vector<int>> removal_ordering(const std::vector<std::array<int, 3>>& clauses,
                                                 int n) {
  std::vector<int> uses(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::array<int, 3>> vars;
  for (const auto& c : clauses) {
    vars.push_back(sorted_vars(c));
    for (int x : vars.back()) {
      if (x < 1 || x > n) return std::nullopt;
      ++uses[x];
    }
  }
  std::vector<char> done(clauses.size(), 0);
  std::vector<int> order;
  while (order.size() < clauses.size()) {
    bool progressed = false;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      if (done[i] || !removable(vars[i], uses)) continue;
      done[i] = 1;
      order.push_back(static_cast<int>(i));
      for (int x : vars[i]) --uses[x];
      progressed = true;
      break;
    }
    if (!progressed) return std::nullopt;
  }
  return order;
}

void validate_formula(const LayoutFormula& f) {
  if (f.n < 1) throw FormulaError("formula needs at least one variable");
  for (char sign : {'+', '-'}) {
    std::vector<const LayoutClause*> side;
    for (const auto& c : f.clauses) {
      if (c.sign != '+' && c.sign != '-') throw FormulaError("clause sign must be + or -");
      if (c.sign == sign) side.push_back(&c);
    }
    std::sort(side.begin(), side.end(),
              [](const LayoutClause* a, const LayoutClause* b) { return a->rank < b->rank; });
    std::vector<int> uses(static_cast<std::size_t>(f.n) + 1, 0);
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (side[i]->rank != static_cast<int>(i) + 1)
        throw FormulaError(std::string("ranks of ") + sign +
                           " clauses must be exactly 1.." + std::to_string(side.size()));
      auto v = sorted_vars(side[i]->lits);
      for (int l : side[i]->lits)
        if (l == 0 || std::abs(l) > f.n) throw FormulaError("literal out of range");
      if (v[0] == v[1] || v[1] == v[2])
        throw FormulaError("clause repeats a variable");
      for (int x : v) ++uses[x];
    }
    for (const auto* c : side) {
      auto v = sorted_vars(c->lits);
      if (!removable(v, uses))
        throw FormulaError(std::string("removal ordering fails at ") + sign + " clause of rank " +
                           std::to_string(c->rank));
      for (int x : v) --uses[x];
    }
  }
}

bool satisfies(const LayoutFormula& f, const std::vector<bool>& a) {
  for (const auto& c : f.clauses) {
    bool ok = false;
    for (int l : c.lits)
      if (a[std::abs(l)] == (l > 0)) ok = true;
    if (!ok) return false;
  }
  return true;
}

// ------------------------------------------------------------- reduction

namespace {

class Layout {
 public:
  explicit Layout(GridShape sh) : sh_(sh), cells_(static_cast<std::size_t>(sh.size()) + 1) {
    for (int id = 1; id <= sh.size(); ++id) cells_[id].cell = sh.point(id);
  }

  void place(FinePoint pt, GadgetKind kind, int var, int clause, FinePoint parent) {
    if (!sh_.contains(pt))
      throw FormulaError("wire leaves the grid at (" + std::to_string(pt.row) + ", " +
                         std::to_string(pt.col) + ")");
    Gadget& g = cells_[sh_.id(pt)];
    if (g.kind != GadgetKind::Dummy)
      throw FormulaError("wire routing collision at (" + std::to_string(pt.row) + ", " +
                         std::to_string(pt.col) + ")");
    g.kind = kind;
    g.var = var;
    g.clause = clause;
    g.parent = parent.row == 0 ? -1 : sh_.id(parent) - 1;
  }

  const Gadget& at(FinePoint pt) const { return cells_[sh_.id(pt)]; }
  std::vector<Gadget>& cells() { return cells_; }

 private:
  GridShape sh_;
  std::vector<Gadget> cells_;
};

}  // namespace

Reduction reduce_3sat(const LayoutFormula& f) {
  validate_formula(f);
  Reduction red;
  const int n = f.n + f.n % 2;
  const int m = static_cast<int>(f.clauses.size());
  int minus = 0;
  for (const auto& c : f.clauses) minus += c.sign == '-';
  red.n_padded = n;
  red.m = m;
  const GridShape sh = GridShape::of(m + 1, n);
  const int r0 = minus + 1;
  const int R0 = 3 * r0 - 2;
  auto col_of = [](int x) { return 3 * x - 2; };
  auto clause_row = [&](const LayoutClause& c) {
    return 3 * (c.sign == '+' ? r0 + c.rank : r0 - c.rank) - 2;
  };
  // A horizontal wire on fine row R occupies rows R-1 and R and leaves
  // column x on row exit(R, x); row 1 has no second row.
  auto exit_row = [](int R, int x) { return R == 1 ? 1 : (x % 2 == 1 ? R : R - 1); };

  Layout lay(sh);
  for (int x = 1; x <= n; ++x) lay.place({R0, col_of(x)}, GadgetKind::Initial, x, -1, {});

  for (char sign : {'+', '-'}) {
    const int dir = sign == '+' ? 1 : -1;
    for (int x = 1; x <= n; ++x) {
      int reach = R0;
      for (const auto& c : f.clauses) {
        if (c.sign != sign) continue;
        auto v = sorted_vars(c.lits);
        const int R = clause_row(c);
        int need = R0;
        if (x == v[0]) need = exit_row(R, col_of(v[0]));
        else if (x == v[2]) need = exit_row(R, col_of(v[2]) - 1);
        else if (x == v[1]) need = sign == '+' ? R - 2 : R + 1;
        else continue;
        reach = dir > 0 ? std::max(reach, need) : std::min(reach, need);
      }
      const int X = col_of(x);
      for (int row = R0 + dir; dir * (reach - row) >= 0; row += dir)
        lay.place({row, X}, GadgetKind::Bull, x, -1, {row - dir, X});
    }
  }

  struct Ends {
    FinePoint clause, left, middle, right;
  };
  std::vector<Ends> ends(f.clauses.size());
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    auto v = sorted_vars(c.lits);
    const int R = clause_row(c);
    const int Xa = col_of(v[0]), Xb = col_of(v[1]), Xc = col_of(v[2]);
    const FinePoint cl = c.sign == '+' ? FinePoint{R - 1, Xb} : FinePoint{R, Xb};
    lay.place(cl, GadgetKind::Clause, 0, static_cast<int>(j), {});

    auto extend = [&](FinePoint& cur, FinePoint next, int var) {
      if (next == cur || next == cl) return;
      lay.place(next, GadgetKind::Bull, var, -1, cur);
      cur = next;
    };
    auto expect_wire = [&](FinePoint pt, int var) {
      const Gadget& g = lay.at(pt);
      if ((g.kind != GadgetKind::Bull && g.kind != GadgetKind::Initial) || g.var != var)
        throw FormulaError("wire of variable " + std::to_string(var) + " does not reach (" +
                           std::to_string(pt.row) + ", " + std::to_string(pt.col) + ")");
    };

    FinePoint left{exit_row(R, Xa), Xa};
    expect_wire(left, v[0]);
    for (int x = Xa + 1; x < Xb; ++x) {
      extend(left, {exit_row(R, x - 1), x}, v[0]);
      extend(left, {exit_row(R, x), x}, v[0]);
    }
    extend(left, {exit_row(R, Xb - 1), Xb}, v[0]);

    FinePoint right{exit_row(R, Xc - 1), Xc};
    expect_wire(right, v[2]);
    for (int x = Xc - 1; x > Xb; --x) {
      extend(right, {exit_row(R, x), x}, v[2]);
      extend(right, {exit_row(R, x - 1), x}, v[2]);
    }
    extend(right, {exit_row(R, Xb), Xb}, v[2]);

    FinePoint mid = c.sign == '+' ? FinePoint{R - 2, Xb} : FinePoint{R + 1, Xb};
    expect_wire(mid, v[1]);
    for (FinePoint e : {left, mid, right})
      if (!grid_adjacent(e, cl)) throw FormulaError("wire end is not adjacent to its clause");
    ends[j] = {cl, left, mid, right};
  }

  // Vertex ids follow the row-major part order.
  std::vector<Gadget>& cells = lay.cells();
  int next = 1;
  for (int id = 1; id <= sh.size(); ++id) {
    Gadget& g = cells[id];
    int count = g.kind == GadgetKind::Initial ? 3
                : g.kind == GadgetKind::Bull  ? 5
                : g.kind == GadgetKind::Clause ? 2
                                               : 1;
    for (int i = 0; i < count; ++i) g.vertices.push_back(next++);
  }
  Graph g(next - 1);
  for (int id = 1; id <= sh.size(); ++id) {
    const Gadget& gd = cells[id];
    const auto& v = gd.vertices;
    if (gd.kind == GadgetKind::Initial || gd.kind == GadgetKind::Bull) {
      g.add_edge(v[0], v[1]);
      g.add_edge(v[0], v[2]);
      g.add_edge(v[1], v[2]);
    }
    if (gd.kind == GadgetKind::Bull) {
      g.add_edge(v[3], v[0]);
      g.add_edge(v[4], v[1]);
      const Gadget& par = cells[gd.parent + 1];
      g.add_edge(par.vertices[0], v[4]);
      g.add_edge(par.vertices[1], v[3]);
    }
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    int cv = lay.at(ends[j].clause).vertices[0];
    auto v = sorted_vars(c.lits);
    const FinePoint at_var[3] = {ends[j].left, ends[j].middle, ends[j].right};
    for (int l : c.lits) {
      int k = static_cast<int>(std::find(v.begin(), v.end(), std::abs(l)) - v.begin());
      const Gadget& end = lay.at(at_var[k]);
      g.add_edge(cv, end.vertices[l > 0 ? 0 : 1]);
    }
  }

  AnnotatedInstance& inst = red.instance;
  inst.graph = g;
  inst.p = m + 1;
  inst.q = n;
  std::vector<int> part_of(static_cast<std::size_t>(g.n()) + 1, 0);
  for (int id = 1; id <= sh.size(); ++id) {
    inst.parts.push_back(cells[id].vertices);
    inst.eta.push_back(cells[id].cell);
    for (int v : cells[id].vertices) part_of[v] = id;
  }

  // Partial sequence: low-degree bulls, then triangles and clauses, then
  // the remaining bulls.
  ContractionSequence& s = inst.witness;
  s.n = g.n();
  auto quotient_degree = [&](int id) {
    std::set<int> nb;
    for (int v : cells[id].vertices)
      for (int w : g.neighbors(v))
        if (part_of[w] != id) nb.insert(part_of[w]);
    return static_cast<int>(nb.size());
  };
  auto bull = [&](const std::vector<int>& v) {
    int z = s.push(v[0], v[2]);
    z = s.push(z, v[3]);
    z = s.push(z, v[1]);
    s.push(z, v[4]);
  };
  std::vector<int> late;
  for (int id = 1; id <= sh.size(); ++id)
    if (cells[id].kind == GadgetKind::Bull) {
      if (quotient_degree(id) <= 2)
        bull(cells[id].vertices);
      else
        late.push_back(id);
    }
  for (int id = 1; id <= sh.size(); ++id) {
    const auto& v = cells[id].vertices;
    if (cells[id].kind == GadgetKind::Initial) s.push(s.push(v[0], v[2]), v[1]);
    if (cells[id].kind == GadgetKind::Clause) s.push(v[0], v[1]);
  }
  for (int id : late) bull(cells[id].vertices);

  red.gadgets.assign(cells.begin() + 1, cells.end());
  return red;
}

std::vector<int> lift_assignment(const Reduction& r, const std::vector<bool>& a) {
  std::vector<int> out;
  for (const Gadget& g : r.gadgets) {
    switch (g.kind) {
      case GadgetKind::Initial:
      case GadgetKind::Bull: out.push_back(g.vertices[a[g.var] ? 0 : 1]); break;
      case GadgetKind::Clause: out.push_back(g.vertices[1]); break;
      case GadgetKind::Dummy: out.push_back(g.vertices[0]); break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tww
