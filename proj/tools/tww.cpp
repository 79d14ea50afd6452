// Command-line front end. Exit codes: 0 success or positive verdict,
// 1 negative verdict, 2 input error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tww/compose.hpp"
#include "tww/dpsolve.hpp"
#include "tww/gadgets.hpp"
#include "tww/io.hpp"
#include "tww/kernel.hpp"
#include "tww/oracle.hpp"
#include "tww/pipeline.hpp"
#include "tww/recognize.hpp"
#include "tww/reduction.hpp"

namespace {

using namespace tww;

constexpr int kOk = 0, kNegative = 1, kInputError = 2;

template <class F>
auto parse_path(const std::string& path, F parse) {
  std::istringstream in(read_file(path));
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

GraphFile load_graph(const std::string& path) {
  return parse_path(path, [](std::istream& in) { return parse_graph_file(in); });
}
ContractionSequence load_sequence(const std::string& path) {
  return parse_path(path, [](std::istream& in) { return parse_sequence(in); });
}

// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

template <class W, class T>
std::string render(W writer, const T& value) {
  std::ostringstream out;
  writer(out, value);
  return out.str();
}

int cmd_verify(int bound, const std::string& graph, const std::string& seq) {
  GraphFile gf = load_graph(graph);
  ContractionSequence s = load_sequence(seq);
  WidthReport r = verify(gf.trigraph(), s, bound);
  std::cout << "width " << r.width << "\nargmax_step " << r.argmax_step << '\n';
  if (r.violation) {
    std::cout << "violation step " << r.violation->step << " vertex " << r.violation->vertex
              << " degree " << r.violation->degree << '\n';
    return kNegative;
  }
  return kOk;
}

int cmd_exact(const std::string& graph, const std::string& witness) {
  TwinWidthResult r = exact_twinwidth(load_graph(graph).trigraph());
  std::cout << "value " << r.width << '\n';
  if (!witness.empty()) write_file(witness, render(write_sequence, r.sequence));
  return kOk;
}

int cmd_recognize(const std::string& graph, const std::string& witness) {
  RecognitionResult r = recognize_tww1(load_graph(graph).graph());
  std::cout << to_string(r.verdict) << '\n';
  if (r.witness && !witness.empty()) write_file(witness, render(write_sequence, *r.witness));
  return r.verdict == Verdict::Above1 ? kNegative : kOk;
}

int cmd_kernel(const std::string& problem, int k, const std::string& graph,
               const std::string& out, const std::string& trace) {
  GraphFile gf = load_graph(graph);
  KernelInstance ki;
  if (problem == "cvc2")
    ki = cvc_kernel_quadratic(gf.graph(), k);
  else if (problem == "cvc15")
    ki = cvc_kernel_improved(gf.graph(), k);
  else
    ki = capvc_kernel(gf.capacitated(), k);
  std::cout << (ki.trivial_no ? "trivial-no" : "kernel") << " n " << ki.graph.n() << " m "
            << ki.graph.edge_count() << " k " << ki.k << " deleted " << ki.trace.size() << '\n';
  if (problem == "capvc")
    emit(out, render(write_capacitated, CapacitatedGraph{ki.graph, ki.cap}));
  else
    emit(out, render(write_graph, ki.graph));
  if (!trace.empty()) write_file(trace, render(write_kernel_trace, ki));
  return kOk;
}

int cmd_solve(const std::string& problem, const std::string& seq, int c,
              const std::string& graph) {
  Graph g = load_graph(graph).graph();
  ContractionSequence s = load_sequence(seq);
  if (c == 0) c = check_component_bound(g, s);
  int v = problem == "ds" ? min_ds_dp(g, s, c) : min_vc_dp(g, s, c);
  std::cout << "value " << v << '\n';
  return kOk;
}

int cmd_validate(const std::string& path) {
  AnnotatedInstance inst =
      parse_path(path, [](std::istream& in) { return parse_instance(in); });
  InstanceReport r = validate_instance(inst);
  std::cout << "partition " << r.partition_ok << "\nspanning " << r.spanning_ok << "\nwitness "
            << r.witness_ok << "\nwidth " << r.width << "\nconfined " << r.confined_ok << '\n';
  if (!r.error.empty()) std::cout << "error " << r.error << '\n';
  return r.ok() ? kOk : kNegative;
}

int cmd_reduce(const std::string& formula, const std::string& out) {
  LayoutFormula f = parse_path(formula, [](std::istream& in) { return parse_formula(in); });
  Reduction r = reduce_3sat(f);
  std::cerr << "parts " << r.instance.N() << " vertices " << r.instance.graph.n() << '\n';
  emit(out, render(write_instance, r.instance));
  return kOk;
}

int cmd_compose(const std::vector<std::string>& inputs, bool formulas, const std::string& out,
                const std::string& witness, const std::string& provenance) {
  if (inputs.empty()) throw CLI::ValidationError("compose needs at least one input file");
  ComposedInstance c;
  WidthReport w;
  if (formulas) {
    std::vector<LayoutFormula> fs;
    for (const auto& p : inputs)
      fs.push_back(parse_path(p, [](std::istream& in) { return parse_formula(in); }));
    HardnessReport rep = pipeline_hardness(fs);
    for (std::size_t i = 0; i < rep.instances.size(); ++i)
      std::cout << "instance " << i + 1 << ' ' << (rep.instances[i].ok() ? "valid" : "invalid")
                << " width " << rep.instances[i].width << '\n';
    c = std::move(rep.composed);
    w = rep.width;
  } else {
    std::vector<AnnotatedInstance> ins;
    for (const auto& p : inputs)
      ins.push_back(parse_path(p, [](std::istream& in) { return parse_instance(in); }));
    c = or_cross_compose(ins);
    w = verify(c.graph, c.witness, 4);
  }
  std::cout << "vertices " << c.graph.n() << " N " << c.N << " rows " << c.t + 1 << "\nwidth "
            << w.width << "\nmax_c2p " << c.max_c2p << '\n';
  emit(out, render(write_graph, c.graph));
  if (!witness.empty()) write_file(witness, render(write_sequence, c.witness));
  if (!provenance.empty()) write_file(provenance, render(write_provenance, c));
  return w.violation || c.max_c2p > 4 ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twin-width toolkit"};
  app.require_subcommand(1);
  int code = kOk;

  int bound = kUnbounded;
  std::string graph, seq, witness, out, trace, problem, provenance, formula;
  int k = 0, c = 0;
  std::vector<std::string> inputs;
  bool formulas = false;

  auto* verify_cmd = app.add_subcommand("verify", "Replay a sequence and report its width");
  verify_cmd->add_option("-d,--bound", bound, "Width bound");
  verify_cmd->add_option("graph", graph)->required();
  verify_cmd->add_option("sequence", seq)->required();
  verify_cmd->callback([&] { code = cmd_verify(bound, graph, seq); });

  auto* exact_cmd = app.add_subcommand("exact", "Exact twin-width by exhaustive search");
  exact_cmd->add_option("graph", graph)->required();
  exact_cmd->add_option("--witness", witness, "Write an optimal sequence here");
  exact_cmd->callback([&] { code = cmd_exact(graph, witness); });

  auto* rec_cmd = app.add_subcommand("recognize", "Decide twin-width 0 or at most 1");
  rec_cmd->add_option("graph", graph)->required();
  rec_cmd->add_option("--witness", witness, "Write the witness sequence here");
  rec_cmd->callback([&] { code = cmd_recognize(graph, witness); });

  auto* kernel_cmd = app.add_subcommand("kernel", "Kernelize a vertex cover instance");
  kernel_cmd->add_option("--problem", problem)->required()->check(
      CLI::IsMember({"cvc2", "cvc15", "capvc"}));
  kernel_cmd->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  kernel_cmd->add_option("graph", graph)->required();
  kernel_cmd->add_option("--out", out, "Reduced graph (default stdout)");
  kernel_cmd->add_option("--trace", trace, "Rule application trace");
  kernel_cmd->callback([&] { code = cmd_kernel(problem, k, graph, out, trace); });

  auto* gen_cmd = app.add_subcommand("gen", "Generate structures");
  gen_cmd->require_subcommand(1);
  int a = 0, b = 0;
  auto* snaking = gen_cmd->add_subcommand("snaking", "Snaking grid s x t");
  snaking->add_option("s", a)->required();
  snaking->add_option("t", b)->required();
  snaking->add_option("--out", out);
  snaking->callback([&] { emit(out, render(write_graph, snaking_grid(a, b).graph)); });
  auto* halfcycle = gen_cmd->add_subcommand("halfcycle", "Cycle of strict half-graphs");
  halfcycle->add_option("layers", a)->required();
  halfcycle->add_option("height", b)->required();
  halfcycle->add_option("--out", out);
  halfcycle->add_option("--witness", witness);
  halfcycle->callback([&] {
    HalfGraphCycle hc = halfgraph_cycle(a, b);
    emit(out, render(write_graph, hc.graph));
    if (!witness.empty()) write_file(witness, render(write_sequence, hc.sequence));
  });
  auto* hamcycle = gen_cmd->add_subcommand("hamcycle", "Hamiltonian cycle of a snaking grid");
  hamcycle->add_option("p", a)->required();
  hamcycle->add_option("q", b)->required();
  hamcycle->callback([&] {
    for (FinePoint y : hamiltonian_cycle(a, b)) std::cout << y.row << ' ' << y.col << '\n';
  });

  auto* red_cmd = app.add_subcommand("reduce3sat", "Planar 3-SAT to annotated instance");
  red_cmd->add_option("formula", formula)->required();
  red_cmd->add_option("--out", out, "Instance file (default stdout)");
  red_cmd->callback([&] { code = cmd_reduce(formula, out); });

  auto* comp_cmd = app.add_subcommand("compose", "OR-composition of annotated instances");
  comp_cmd->add_option("inputs", inputs)->required();
  comp_cmd->add_flag("--formulas", formulas, "Inputs are formula files; reduce them first");
  comp_cmd->add_option("--out", out, "Composed graph (default stdout)");
  comp_cmd->add_option("--witness", witness, "Composed witness sequence");
  comp_cmd->add_option("--provenance", provenance, "Per-vertex tag file");
  comp_cmd->callback([&] { code = cmd_compose(inputs, formulas, out, witness, provenance); });

  auto* solve_cmd = app.add_subcommand("solve", "Dynamic programme along a sequence");
  solve_cmd->add_option("--problem", problem)->required()->check(CLI::IsMember({"ds", "vc"}));
  solve_cmd->add_option("--sequence", seq)->required();
  solve_cmd->add_option("--component-bound", c, "Default: measured along the sequence")->check(CLI::Range(1, 20));
  solve_cmd->add_option("graph", graph)->required();
  solve_cmd->callback([&] { code = cmd_solve(problem, seq, c, graph); });

  auto* val_cmd = app.add_subcommand("validate-instance", "Check an annotated instance");
  val_cmd->add_option("instance", graph)->required();
  val_cmd->callback([&] { code = cmd_validate(graph); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return code;
}
