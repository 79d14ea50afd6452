#include <doctest.h>

#include "support.hpp"
#include "tww/sequence.hpp"

using namespace tww;

namespace {

ContractionSequence seq(int n, std::vector<std::pair<int, int>> pairs) {
  ContractionSequence s;
  s.n = n;
  for (auto [u, v] : pairs) s.push(u, v);
  return s;
}

ContractionSequence random_full(const Trigraph& t0, std::mt19937_64& rng) {
  ContractionSequence s{t0.original_count(), t0.max_id() - t0.original_count(), {}};
  Trigraph t = t0;
  while (t.vertex_count() > 1) {
    auto vs = t.vertices();
    std::shuffle(vs.begin(), vs.end(), rng);
    int z = s.push(vs[0], vs[1]);
    t.contract_in_place(vs[0], vs[1], z);
  }
  return s;
}

}  // namespace

TEST_CASE("replay") {
  Graph k3 = tst::complete(3);
  CHECK(replay(k3, seq(3, {})).size() == 1);
  auto snaps = replay(k3, seq(3, {{1, 2}, {3, 4}}));
  REQUIRE(snaps.size() == 3);
  for (const auto& t : snaps) CHECK(t.red_edge_count() == 0);

  auto m = tst::mixed_example();
  ContractionSequence one{13, 0, {{14, 1, 2}}};
  Trigraph last;
  replay_visit(m.t, one, [&](int, const Trigraph& t) { last = t; });
  CHECK(last == contract(m.t, 1, 2, 14));
}

TEST_CASE("verify examples") {
  CHECK(verify(tst::complete(5), seq(5, {{1, 2}, {3, 6}, {4, 7}, {5, 8}})).width == 0);
  WidthReport c5 = verify(tst::cycle(5), seq(5, {{1, 2}, {3, 6}, {4, 7}, {5, 8}}));
  CHECK(c5.width == 2);
  // P4 a-b-c-d: (a,c), (b,d), then the two results.
  CHECK(verify(tst::path(4), seq(4, {{1, 3}, {2, 4}, {5, 6}})).width == 1);
}

TEST_CASE("verify reports the first violation") {
  WidthReport r = verify(tst::cycle(5), seq(5, {{1, 2}, {3, 6}, {4, 7}, {5, 8}}), 1);
  REQUIRE(r.violation);
  CHECK(r.violation->step == 1);
  CHECK(r.violation->degree == 2);
  CHECK_FALSE(verify(tst::cycle(5), seq(5, {{1, 2}}), 2).violation);
}

TEST_CASE("malformed sequences raise SequenceError") {
  Graph p4 = tst::path(4);
  CHECK_THROWS_AS(verify(p4, seq(4, {{1, 2}, {1, 3}})), SequenceError);
  CHECK_THROWS_AS(verify(p4, seq(4, {{1, 1}})), SequenceError);
  CHECK_THROWS_AS(verify(p4, ContractionSequence{4, 0, {{7, 1, 2}}}), SequenceError);
  CHECK_THROWS_AS(verify(p4, seq(5, {{1, 2}})), SequenceError);
}

TEST_CASE("concat") {
  ContractionSequence a = seq(4, {{1, 3}});
  CHECK(concat(a, ContractionSequence{4, 1, {}}) == a);
  ContractionSequence b{4, 1, {}};
  b.push(2, 4);
  b.push(5, 6);
  ContractionSequence ab = concat(a, b);
  CHECK(ab.steps.size() == 3);
  CHECK(verify(tst::path(4), ab).width == 1);
  CHECK_THROWS_AS(concat(a, ContractionSequence{4, 0, {{5, 2, 4}}}), SequenceError);
  CHECK_THROWS_AS(concat(a, ContractionSequence{5, 1, {}}), SequenceError);
}

TEST_CASE("property: incremental and full verification agree") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    Trigraph t(tst::random_graph(n, 0.35, rng));
    ContractionSequence s = random_full(t, rng);
    int bound = std::uniform_int_distribution<int>(0, 5)(rng);
    WidthReport a = verify(t, s, bound), b = verify_slow(t, s, bound);
    REQUIRE(a.width == b.width);
    REQUIRE(a.argmax_step == b.argmax_step);
    REQUIRE(a.violation.has_value() == b.violation.has_value());
    if (a.violation) {
      CHECK(a.violation->step == b.violation->step);
      CHECK(a.violation->vertex == b.violation->vertex);
    }
    int max_snap = 0;
    replay_visit(t, s, [&](int, const Trigraph& x) { max_snap = std::max(max_snap, x.max_red_degree()); });
    CHECK(max_snap == a.width);
  }
}

TEST_CASE("property: disjoint twin pairs commute") {
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Graph g = tst::random_cograph(std::uniform_int_distribution<int>(4, 10)(rng), rng);
    std::vector<std::pair<int, int>> twins;
    for (int u = 1; u <= g.n(); ++u)
      for (int v = u + 1; v <= g.n(); ++v) {
        auto nu = g.neighbors(u), nv = g.neighbors(v);
        sorted_erase(nu, v);
        sorted_erase(nv, u);
        if (nu == nv) twins.push_back({u, v});
      }
    for (std::size_t i = 0; i < twins.size(); ++i)
      for (std::size_t j = i + 1; j < twins.size(); ++j) {
        auto [a, b] = twins[i];
        auto [c, d] = twins[j];
        if (a == c || a == d || b == c || b == d) continue;
        Trigraph x = final_trigraph(Trigraph(g), seq(g.n(), {{a, b}, {c, d}}));
        Trigraph y = final_trigraph(Trigraph(g), seq(g.n(), {{c, d}, {a, b}}));
        // Same bags and edges up to the swap of the two fresh ids.
        int n = g.n();
        REQUIRE(x.bag(n + 1) == y.bag(n + 2));
        REQUIRE(x.bag(n + 2) == y.bag(n + 1));
        REQUIRE(x.red_edge_count() == y.red_edge_count());
        REQUIRE(x.black_edge_count() == y.black_edge_count());
        REQUIRE(x.edge(n + 1, n + 2) == y.edge(n + 1, n + 2));
        ++checked;
      }
  }
  CHECK(checked > 100);
}
