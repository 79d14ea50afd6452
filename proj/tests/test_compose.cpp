#include <doctest.h>

#include "support.hpp"
#include "tww/compose.hpp"
#include "tww/oracle.hpp"

using namespace tww;

namespace {

LayoutFormula formula(int n, std::vector<LayoutClause> clauses) {
  LayoutFormula f;
  f.n = n;
  f.clauses = std::move(clauses);
  return f;
}

bool positive(const ComposedInstance& c) {
  return find_dominating_set(c.graph, c.N, c.forced_parts(), 1000).has_value();
}

}  // namespace

TEST_CASE("dummy instance") {
  AnnotatedInstance d = make_dummy(16, 2, 2);
  CHECK(d.graph.n() == 32);
  CHECK(d.graph.edge_count() == 0);
  CHECK(d.N() == 16);
  for (const auto& part : d.parts) CHECK(part.size() == 2);
  CHECK(validate_instance(d).ok());
  CHECK_THROWS_AS(make_dummy(15, 2, 2), PreconditionError);
}

TEST_CASE("composition preconditions") {
  CHECK_THROWS_AS(or_cross_compose({}), PreconditionError);
  CHECK_THROWS_AS(or_cross_compose({tst::micro_instance(2, 2, false), tst::micro_instance(2, 4, false)}),
                  PreconditionError);
  AnnotatedInstance broken = tst::micro_instance(2, 2, false);
  broken.eta[1] = broken.eta[0];
  CHECK_THROWS_AS(or_cross_compose({broken}), PreconditionError);
}

TEST_CASE("edge taxonomy") {
  Reduction r = reduce_3sat(formula(3, {{'+', 1, {1, 2, -3}}}));
  std::vector<AnnotatedInstance> in{r.instance, r.instance};
  ComposedInstance c = or_cross_compose(in);
  CHECK(c.N == 40);
  CHECK(c.t == 2);
  CHECK(c.graph.n() == 2 * r.instance.graph.n() + 80);

  std::vector<long long> row_edges(4, 0);
  for (auto [u, v] : c.graph.edges()) {
    const Provenance& a = c.provenance[u];
    const Provenance& b = c.provenance[v];
    if (a.row == b.row) {
      ++row_edges[a.row];
      CHECK_FALSE(c.half_graph_pair(u, v));
    } else {
      const Provenance& lo = a.row < b.row ? a : b;
      const Provenance& hi = a.row < b.row ? b : a;
      CHECK(hi.part == lo.part % c.N + 1);
    }
  }
  CHECK(row_edges[1] == r.instance.graph.edge_count());
  CHECK(row_edges[2] == r.instance.graph.edge_count());
  CHECK(row_edges[3] == 0);

  // Every cross-row pair the formula names is an edge.
  long long expected = 0;
  for (int i = 1; i <= 3; ++i)
    for (int l = i + 1; l <= 3; ++l)
      for (int j = 1; j <= c.N; ++j)
        expected += static_cast<long long>(c.cell(i, j).size()) * c.cell(l, j % c.N + 1).size();
  CHECK(c.graph.edge_count() == 2 * r.instance.graph.edge_count() + expected);
}

TEST_CASE("composed witness has width at most four") {
  Reduction a = reduce_3sat(formula(3, {{'+', 1, {1, 2, -3}}}));
  Reduction b = reduce_3sat(formula(4, {{'-', 1, {-2, 3, 4}}}));
  for (int t = 1; t <= 3; ++t) {
    std::vector<AnnotatedInstance> in;
    for (int i = 0; i < t; ++i) in.push_back(i % 2 ? b.instance : a.instance);
    ComposedInstance c = or_cross_compose(in);
    WidthReport w = verify(c.graph, c.witness, 4);
    CHECK_FALSE(w.violation);
    CHECK(static_cast<int>(c.witness.steps.size()) == c.graph.n() - 1);
    CHECK(c.max_c2p <= 4);
    for (const MergeCheck& m : c.merges) CHECK(m.contracted + 2 * m.pending <= 4);
  }
}

TEST_CASE("stage-two degree argument on micro grids") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 4}})
    for (int t = 1; t <= 3; ++t) {
      std::vector<AnnotatedInstance> in(static_cast<std::size_t>(t), tst::micro_instance(p, q, false));
      ComposedInstance c = or_cross_compose(in);
      CHECK(c.max_c2p <= 4);
      CHECK(static_cast<int>(c.merges.size()) == t * c.N);
      CHECK_FALSE(verify(c.graph, c.witness, 4).violation);
    }
}

TEST_CASE("OR semantics on micro instances") {
  AnnotatedInstance yes = tst::micro_instance(2, 2, false);
  AnnotatedInstance no = tst::micro_instance(2, 2, true);
  CHECK(min_dominating_set(yes.graph, Partition{yes.parts}).size == 16);
  CHECK(min_dominating_set(no.graph, Partition{no.parts}).size == 17);

  CHECK(positive(or_cross_compose({yes, yes})));
  CHECK(positive(or_cross_compose({yes, no})));
  CHECK(positive(or_cross_compose({no, yes})));
  CHECK_FALSE(positive(or_cross_compose({no, no})));
  CHECK_FALSE(positive(or_cross_compose({no})));
  CHECK(positive(or_cross_compose({no, no, yes})));
}

TEST_CASE("forced parts") {
  ComposedInstance c = or_cross_compose({tst::micro_instance(2, 2, false)});
  Partition fp = c.forced_parts();
  CHECK(static_cast<int>(fp.parts.size()) == c.N);
  std::vector<int> all;
  for (const auto& part : fp.parts) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(static_cast<int>(all.size()) == c.graph.n());
}
