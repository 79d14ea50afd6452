#include <doctest.h>

#include "support.hpp"
#include "tww/oracle.hpp"
#include "tww/reduction.hpp"

using namespace tww;

namespace {

LayoutFormula one_clause() {
  LayoutFormula f;
  f.n = 3;
  f.clauses.push_back({'+', 1, {1, 2, -3}});
  return f;
}

Partition parts_of(const AnnotatedInstance& inst) { return Partition{inst.parts}; }

}  // namespace

TEST_CASE("removal ordering") {
  CHECK(removal_ordering({{1, 2, 3}}, 3) == std::vector<int>{0});
  // Nested: the inner clause retires 2, then the outer one is consecutive.
  CHECK(removal_ordering({{1, 3, 4}, {1, 2, 3}}, 4) == std::vector<int>{1, 0});
  // Retiring 3 first lets {1, 2, 4} become consecutive.
  CHECK(removal_ordering({{1, 2, 4}, {2, 3, 4}}, 4).has_value());
  // Crossing: 3 is shared and {1, 3, 5} straddles 2 and 4.
  CHECK_FALSE(removal_ordering({{1, 3, 5}, {2, 3, 4}}, 5));
  CHECK(removal_ordering({}, 2).value().empty());
}

TEST_CASE("formula validation") {
  CHECK_NOTHROW(validate_formula(one_clause()));

  LayoutFormula bad_rank = one_clause();
  bad_rank.clauses[0].rank = 2;
  CHECK_THROWS_AS(validate_formula(bad_rank), FormulaError);

  LayoutFormula repeated = one_clause();
  repeated.clauses[0].lits = {1, -1, 2};
  CHECK_THROWS_AS(validate_formula(repeated), FormulaError);

  LayoutFormula range = one_clause();
  range.clauses[0].lits = {1, 2, 4};
  CHECK_THROWS_AS(validate_formula(range), FormulaError);

  LayoutFormula zero = one_clause();
  zero.clauses[0].lits = {0, 1, 2};
  CHECK_THROWS_AS(validate_formula(zero), FormulaError);

  // Declared order retires the outer clause first, which is not removable.
  LayoutFormula order;
  order.n = 4;
  order.clauses.push_back({'+', 1, {1, 3, 4}});
  order.clauses.push_back({'+', 2, {1, 2, 3}});
  CHECK_THROWS_AS(validate_formula(order), FormulaError);
  order.clauses[0].rank = 2;
  order.clauses[1].rank = 1;
  CHECK_NOTHROW(validate_formula(order));

  // Ranks are per sign.
  LayoutFormula both;
  both.n = 3;
  both.clauses.push_back({'+', 1, {1, 2, 3}});
  both.clauses.push_back({'-', 1, {-1, -2, -3}});
  CHECK_NOTHROW(validate_formula(both));
}

TEST_CASE("satisfies") {
  LayoutFormula f = one_clause();
  CHECK(satisfies(f, {false, true, false, true}));
  CHECK_FALSE(satisfies(f, {false, false, false, true}));
  CHECK(satisfies(f, {false, false, false, false}));
}

TEST_CASE("reduction of a single clause") {
  Reduction r = reduce_3sat(one_clause());
  CHECK(r.n_padded == 4);
  CHECK(r.m == 1);
  CHECK(r.instance.N() == 40);
  CHECK(r.instance.p == 2);
  CHECK(r.instance.q == 4);
  InstanceReport rep = validate_instance(r.instance);
  CHECK_MESSAGE(rep.ok(), rep.error);
  CHECK(rep.width <= 4);

  std::vector<bool> a{false, true, false, false, false};
  REQUIRE(satisfies(one_clause(), a));
  auto lifted = lift_assignment(r, a);
  CHECK(static_cast<int>(lifted.size()) == r.instance.N());
  CHECK(is_dominating_set(r.instance.graph, lifted));

  std::vector<bool> falsifying{false, false, false, true, false};
  CHECK_FALSE(is_dominating_set(r.instance.graph, lift_assignment(r, falsifying)));
}

TEST_CASE("reduction of the empty formula") {
  LayoutFormula f;
  f.n = 2;
  Reduction r = reduce_3sat(f);
  CHECK(r.instance.N() == 4);
  CHECK(validate_instance(r.instance).ok());
  CHECK(min_dominating_set(r.instance.graph, parts_of(r.instance), 400).size == r.instance.N());
}

TEST_CASE("odd variable counts are padded") {
  LayoutFormula f;
  f.n = 5;
  f.clauses.push_back({'-', 1, {3, -4, 5}});
  Reduction r = reduce_3sat(f);
  CHECK(r.n_padded == 6);
  CHECK(validate_instance(r.instance).ok());
}

TEST_CASE("instance validator rejects broken instances") {
  Reduction r = reduce_3sat(one_clause());

  AnnotatedInstance swapped = r.instance;
  std::swap(swapped.eta[0], swapped.eta[5]);
  CHECK_FALSE(validate_instance(swapped).ok());

  AnnotatedInstance short_seq = r.instance;
  short_seq.witness.steps.pop_back();
  CHECK_FALSE(validate_instance(short_seq).ok());

  AnnotatedInstance extra = r.instance;
  auto [u, v] = std::pair(extra.parts[0][0], extra.parts[39][0]);
  extra.graph.add_edge(u, v);
  CHECK_FALSE(validate_instance(extra).ok());
}

TEST_CASE("property: satisfiable exactly when the forced domination number is N") {
  std::mt19937_64 rng(101);
  int sat = 0;
  for (int iter = 0; iter < 24; ++iter) {
    int n = std::uniform_int_distribution<int>(3, 4)(rng);
    int plus = std::uniform_int_distribution<int>(0, 2)(rng);
    int minus = std::uniform_int_distribution<int>(0, 2 - plus)(rng);
    LayoutFormula f = tst::random_layout_formula(n, plus, minus, rng);
    Reduction r = reduce_3sat(f);
    InstanceReport rep = validate_instance(r.instance);
    REQUIRE_MESSAGE(rep.ok(), rep.error);
    auto model = tst::brute_sat(f, r.n_padded);
    auto ds = find_dominating_set(r.instance.graph, r.instance.N(), parts_of(r.instance), 1000);
    CHECK(model.has_value() == ds.has_value());
    if (model) {
      ++sat;
      CHECK(is_dominating_set(r.instance.graph, lift_assignment(r, *model)));
    }
  }
  CHECK(sat > 0);
}

TEST_CASE("two-sided formula") {
  LayoutFormula f;
  f.n = 3;
  f.clauses.push_back({'+', 1, {1, 2, 3}});
  f.clauses.push_back({'-', 1, {-1, -2, -3}});
  Reduction r = reduce_3sat(f);
  CHECK(validate_instance(r.instance).ok());
  CHECK(find_dominating_set(r.instance.graph, r.instance.N(), parts_of(r.instance), 1000));
  // Every assignment lifts to a dominating set exactly when it satisfies f.
  for (int m = 0; m < 16; ++m) {
    std::vector<bool> a(5);
    for (int x = 1; x <= 4; ++x) a[x] = m >> (x - 1) & 1;
    CHECK(satisfies(f, a) == is_dominating_set(r.instance.graph, lift_assignment(r, a)));
  }
}
