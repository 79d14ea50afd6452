#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "tww/io.hpp"

using namespace tww;

namespace {

template <class F>
auto parse(const std::string& text, F f) {
  std::istringstream in(text);
  return f(in);
}

int error_line(const std::string& text) {
  try {
    parse(text, parse_graph_file);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("graph round trip") {
  std::mt19937_64 rng(121);
  for (int iter = 0; iter < 30; ++iter) {
    Graph g = tst::random_graph(std::uniform_int_distribution<int>(0, 15)(rng), 0.3, rng);
    std::ostringstream out;
    write_graph(out, g);
    CHECK(parse(out.str(), parse_graph) == g);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  Graph g = parse("# a path\n\ngraph 3\nedge 1 2 # first\nedge 2 3\n", parse_graph);
  CHECK(g == tst::path(3));
}

TEST_CASE("graph parse errors carry line numbers") {
  CHECK(error_line("graph 3\nedge 1 1\n") == 2);
  CHECK(error_line("graph 3\nedge 1 2\nedge 2 1\n") == 3);
  CHECK(error_line("graph 3\n\nedge 1 4\n") == 3);
  CHECK(error_line("edge 1 2\n") == 1);
  CHECK(error_line("graph 3\nvertex 1\n") == 2);
  CHECK(error_line("graph x\n") == 1);
  try {
    parse("graph 3\nedge 2 2\n", parse_graph);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 2:", 0) == 0);
  }
}

TEST_CASE("trigraph round trip") {
  Trigraph t = contract(Trigraph(tst::path(5)), 1, 3, 6);
  std::ostringstream out;
  write_trigraph(out, t);
  CHECK(parse(out.str(), parse_graph_file).trigraph() == t);
  CHECK_THROWS_AS(parse(out.str(), parse_graph_file).graph(), PreconditionError);
}

TEST_CASE("capacitated round trip") {
  CapacitatedGraph cg{tst::star(3), {0, 3, -1, 0, 2}};
  std::ostringstream out;
  write_capacitated(out, cg);
  CapacitatedGraph back = parse(out.str(), parse_graph_file).capacitated();
  CHECK(back.graph == cg.graph);
  CHECK(back.cap == cg.cap);
}

TEST_CASE("sequence round trip and fresh ids") {
  ContractionSequence s;
  s.n = 4;
  int a = s.push(1, 2);
  s.push(a, 3);
  std::ostringstream out;
  write_sequence(out, s);
  CHECK(parse(out.str(), parse_sequence) == s);
  try {
    parse("seq 5\ncontract 7 1 2\n", parse_sequence);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("fresh id expected z = 6, got 7") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("contract 6 1 2\n", parse_sequence), ParseError);
  CHECK_THROWS_AS(parse("seq 5\ncontract 6 1 1\n", parse_sequence), ParseError);
}

TEST_CASE("formula round trip") {
  LayoutFormula f;
  f.n = 4;
  f.clauses.push_back({'+', 1, {1, -2, 3}});
  f.clauses.push_back({'-', 1, {-2, 3, 4}});
  std::ostringstream out;
  write_formula(out, f);
  LayoutFormula g = parse(out.str(), parse_formula);
  CHECK(g.n == 4);
  REQUIRE(g.clauses.size() == 2);
  CHECK(g.clauses[1].sign == '-');
  CHECK(g.clauses[1].lits == f.clauses[1].lits);
  CHECK_THROWS_AS(parse("formula 3\nclause * 1 1 2 3\n", parse_formula), ParseError);
  CHECK_THROWS_AS(parse("formula 3\nclause + 1 1 2 4\n", parse_formula), ParseError);
}

TEST_CASE("instance round trip") {
  LayoutFormula f;
  f.n = 3;
  f.clauses.push_back({'+', 1, {1, 2, -3}});
  AnnotatedInstance inst = reduce_3sat(f).instance;
  std::ostringstream out;
  write_instance(out, inst);
  AnnotatedInstance back = parse(out.str(), parse_instance);
  CHECK(back.graph == inst.graph);
  CHECK(back.parts == inst.parts);
  CHECK(back.eta == inst.eta);
  CHECK(back.witness == inst.witness);
  CHECK(back.p == inst.p);
  CHECK(back.q == inst.q);
  CHECK(validate_instance(back).ok());
}
