#include <doctest.h>

#include <numeric>
#include <set>

#include "support.hpp"
#include "tww/modular.hpp"

using namespace tww;

namespace {

std::vector<int> complement_of(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("maximal modular partition examples") {
  ModularPartition k = maximal_modular_partition(tst::complete(5));
  CHECK(k.parts.parts.size() == 1);
  CHECK_FALSE(k.prime);

  ModularPartition p4 = maximal_modular_partition(tst::path(4));
  CHECK(p4.prime);
  CHECK(p4.parts.parts.size() == 4);

  // K2 on {1,2} joined to the independent pair {3,4}.
  Graph g(4);
  g.add_edge(1, 2);
  for (int a : {1, 2})
    for (int b : {3, 4}) g.add_edge(a, b);
  ModularPartition m = maximal_modular_partition(g);
  for (const auto& part : m.parts.parts) CHECK(is_module(g, part, complement_of(4, part)));
  CHECK(m.quotient.red_edge_count() == 0);

  CHECK_THROWS_AS(maximal_modular_partition(Graph(1)), PreconditionError);
}

TEST_CASE("property: parts are modules and the quotient is red-free") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 300; ++iter) {
    int n = std::uniform_int_distribution<int>(2, 11)(rng);
    Graph g = iter % 3 ? tst::random_graph(n, 0.4, rng) : tst::random_cograph(n, rng);
    ModularPartition m = maximal_modular_partition(g);
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    m.parts.validate(all);
    for (auto part : m.parts.parts) {
      std::sort(part.begin(), part.end());
      REQUIRE(is_module(g, part, complement_of(n, part)));
    }
    CHECK(m.quotient.red_edge_count() == 0);
    CHECK(m.quotient.vertex_count() == static_cast<int>(m.parts.parts.size()));
    if (m.prime)
      for (const auto& part : m.parts.parts) CHECK(part.size() == 1);
  }
}

TEST_CASE("module closure") {
  Graph p4 = tst::path(4);
  CHECK(module_closure(p4, {1, 2}).size() == 4);
  Graph c4 = tst::cycle(4);
  CHECK(module_closure(c4, {1, 3}) == std::vector<int>{1, 3});
}

TEST_CASE("trace classes examples") {
  Graph p4 = tst::path(4);
  CHECK(trace_classes(p4, {1, 2, 3, 4}).parts.empty());

  // X = {1, 2}; outside vertices 3..6 see {}, {1}, {2}, {1,2}.
  Graph g(6);
  g.add_edge(4, 1);
  g.add_edge(5, 2);
  g.add_edge(6, 1);
  g.add_edge(6, 2);
  CHECK(trace_classes(g, {1, 2}).parts.size() == 4);

  CHECK(trace_classes(tst::star(5), {1}).parts.size() == 1);
}

TEST_CASE("property: trace classes count distinct neighbourhoods in X") {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 200; ++iter) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    Graph g = tst::random_graph(n, 0.4, rng);
    std::vector<int> x;
    for (int v = 1; v <= n; ++v)
      if (rng() % 3 == 0) x.push_back(v);
    std::set<std::vector<int>> traces;
    for (int v = 1; v <= n; ++v) {
      if (std::binary_search(x.begin(), x.end(), v)) continue;
      std::vector<int> t;
      for (int w : g.neighbors(v))
        if (std::binary_search(x.begin(), x.end(), w)) t.push_back(w);
      traces.insert(t);
    }
    auto cls = trace_class_list(g, x);
    CHECK(cls.size() == traces.size());
    for (std::size_t i = 1; i < cls.size(); ++i) CHECK(cls[i - 1].trace < cls[i].trace);
  }
}
