#include "tww/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace tww {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tok;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string w; ss >> w;) line.tok.push_back(w);
    if (!line.tok.empty()) out.push_back(std::move(line));
  }
  return out;
}

int to_int(const Line& l, std::size_t i) {
  if (i >= l.tok.size()) throw ParseError(l.number, "missing field " + std::to_string(i));
  const std::string& s = l.tok[i];
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(l.number, "expected an integer, got '" + s + "'");
  return v;
}

void arity(const Line& l, std::size_t n) {
  if (l.tok.size() != n)
    throw ParseError(l.number, "'" + l.tok[0] + "' takes " + std::to_string(n - 1) + " fields");
}

struct Edge {
  int u, v, line;
};

// Shared by graph and instance files; returns false for unknown keywords.
class GraphReader {
 public:
  bool accept(const Line& l) {
    const std::string& k = l.tok[0];
    if (k == "graph") {
      arity(l, 2);
      if (seen_header_) throw ParseError(l.number, "second graph header");
      f_.n = to_int(l, 1);
      if (f_.n < 0) throw ParseError(l.number, "negative vertex count");
      seen_header_ = true;
      return true;
    }
    if (k != "edge" && k != "redge" && k != "bag" && k != "cap") return false;
    if (!seen_header_) throw ParseError(l.number, "'" + k + "' before the graph header");
    if (k == "edge" || k == "redge") {
      arity(l, 3);
      Edge e{to_int(l, 1), to_int(l, 2), l.number};
      if (e.u == e.v) throw ParseError(l.number, "self-loop on " + std::to_string(e.u));
      (k == "edge" ? black_ : red_).push_back(e);
    } else if (k == "bag") {
      if (l.tok.size() < 3) throw ParseError(l.number, "bag needs an id and members");
      int z = to_int(l, 1);
      if (z < 1) throw ParseError(l.number, "bag id must be positive");
      std::vector<int> members;
      for (std::size_t i = 2; i < l.tok.size(); ++i) {
        int v = to_int(l, i);
        if (v < 1 || v > f_.n) throw ParseError(l.number, "bag member out of range");
        members.push_back(v);
      }
      std::sort(members.begin(), members.end());
      if (!f_.bags.emplace(z, members).second) throw ParseError(l.number, "repeated bag id");
      bag_line_ = l.number;
    } else {
      arity(l, 3);
      int v = to_int(l, 1), c = to_int(l, 2);
      if (v < 1 || v > f_.n) throw ParseError(l.number, "capacity for unknown vertex");
      if (!f_.has_cap) f_.cap.assign(static_cast<std::size_t>(f_.n) + 1, 0);
      f_.has_cap = true;
      f_.cap[v] = c;
    }
    return true;
  }

  GraphFile finish(int last_line) {
    if (!seen_header_) throw ParseError(last_line, "missing graph header");
    if (!f_.bags.empty()) {
      std::vector<int> all;
      for (auto& [z, b] : f_.bags) all.insert(all.end(), b.begin(), b.end());
      std::sort(all.begin(), all.end());
      bool ok = static_cast<int>(all.size()) == f_.n;
      for (int i = 0; ok && i < f_.n; ++i) ok = all[i] == i + 1;
      if (!ok) throw ParseError(bag_line_, "bags do not partition 1.." + std::to_string(f_.n));
    }
    auto live = [&](int v) { return f_.bags.empty() ? v >= 1 && v <= f_.n : f_.bags.count(v) > 0; };
    std::set<std::pair<int, int>> seen;
    for (auto* list : {&black_, &red_})
      for (const Edge& e : *list) {
        if (!live(e.u) || !live(e.v))
          throw ParseError(e.line, "edge endpoint is not a vertex");
        if (!seen.insert(std::minmax(e.u, e.v)).second)
          throw ParseError(e.line, "duplicate edge " + std::to_string(e.u) + " " +
                                       std::to_string(e.v));
        (list == &black_ ? f_.black : f_.red).push_back({e.u, e.v});
      }
    return f_;
  }

 private:
  GraphFile f_;
  bool seen_header_ = false;
  int bag_line_ = 0;
  std::vector<Edge> black_, red_;
};

// Shared by sequence and instance files.
class SequenceReader {
 public:
  bool accept(const Line& l) {
    const std::string& k = l.tok[0];
    if (k == "seq") {
      arity(l, 2);
      if (seen_header_) throw ParseError(l.number, "second seq header");
      s_.n = to_int(l, 1);
      if (s_.n < 0) throw ParseError(l.number, "negative vertex count");
      seen_header_ = true;
      return true;
    }
    if (k != "contract") return false;
    if (!seen_header_) throw ParseError(l.number, "contract before the seq header");
    arity(l, 4);
    int z = to_int(l, 1), u = to_int(l, 2), v = to_int(l, 3);
    if (z != s_.next_id())
      throw ParseError(l.number, "fresh id expected z = " + std::to_string(s_.next_id()) +
                                     ", got " + std::to_string(z));
    if (u == v) throw ParseError(l.number, "contraction of a vertex with itself");
    if (u < 1 || v < 1 || u >= z || v >= z) throw ParseError(l.number, "contracted id out of range");
    s_.push(u, v);
    return true;
  }
  bool seen() const { return seen_header_; }
  ContractionSequence finish(int last_line) {
    if (!seen_header_) throw ParseError(last_line, "missing seq header");
    return s_;
  }

 private:
  ContractionSequence s_;
  bool seen_header_ = false;
};

int last_line(const std::vector<Line>& ls) { return ls.empty() ? 0 : ls.back().number; }

[[noreturn]] void unknown(const Line& l) {
  throw ParseError(l.number, "unknown keyword '" + l.tok[0] + "'");
}

}  // namespace

Graph GraphFile::graph() const {
  if (!red.empty() || !bags.empty())
    throw PreconditionError("expected a plain graph, found red edges or bags");
  Graph g(n);
  for (auto [u, v] : black) g.add_edge(u, v);
  return g;
}

Trigraph GraphFile::trigraph() const {
  if (bags.empty()) {
    Trigraph t = Trigraph::with_original_count(n);
    for (int v = 1; v <= n; ++v) t.add_vertex(v, {v});
    for (auto [u, v] : black) t.set_edge(u, v, EdgeKind::Black);
    for (auto [u, v] : red) t.set_edge(u, v, EdgeKind::Red);
    return t;
  }
  Trigraph t = Trigraph::with_original_count(n);
  for (auto& [z, b] : bags) t.add_vertex(z, b);
  for (auto [u, v] : black) t.set_edge(u, v, EdgeKind::Black);
  for (auto [u, v] : red) t.set_edge(u, v, EdgeKind::Red);
  return t;
}

CapacitatedGraph GraphFile::capacitated() const {
  CapacitatedGraph cg{graph(), cap};
  if (cg.cap.empty()) cg.cap.assign(static_cast<std::size_t>(n) + 1, 0);
  return cg;
}

GraphFile parse_graph_file(std::istream& in) {
  auto ls = tokenize(in);
  GraphReader r;
  for (const Line& l : ls)
    if (!r.accept(l)) unknown(l);
  return r.finish(last_line(ls));
}

Graph parse_graph(std::istream& in) {
  GraphFile f = parse_graph_file(in);
  if (!f.red.empty() || !f.bags.empty())
    throw ParseError(0, "red edges and bags are not allowed in a plain graph");
  return f.graph();
}

ContractionSequence parse_sequence(std::istream& in) {
  auto ls = tokenize(in);
  SequenceReader r;
  for (const Line& l : ls)
    if (!r.accept(l)) unknown(l);
  return r.finish(last_line(ls));
}

LayoutFormula parse_formula(std::istream& in) {
  auto ls = tokenize(in);
  LayoutFormula f;
  bool header = false;
  for (const Line& l : ls) {
    if (l.tok[0] == "formula") {
      arity(l, 2);
      if (header) throw ParseError(l.number, "second formula header");
      f.n = to_int(l, 1);
      if (f.n < 1) throw ParseError(l.number, "formula needs at least one variable");
      header = true;
    } else if (l.tok[0] == "clause") {
      if (!header) throw ParseError(l.number, "clause before the formula header");
      arity(l, 6);
      LayoutClause c;
      if (l.tok[1] != "+" && l.tok[1] != "-") throw ParseError(l.number, "sign must be + or -");
      c.sign = l.tok[1][0];
      c.rank = to_int(l, 2);
      for (int i = 0; i < 3; ++i) {
        c.lits[i] = to_int(l, 3 + i);
        if (c.lits[i] == 0 || std::abs(c.lits[i]) > f.n)
          throw ParseError(l.number, "literal out of range");
      }
      f.clauses.push_back(c);
    } else {
      unknown(l);
    }
  }
  if (!header) throw ParseError(last_line(ls), "missing formula header");
  return f;
}

AnnotatedInstance parse_instance(std::istream& in) {
  auto ls = tokenize(in);
  GraphReader gr;
  SequenceReader sr;
  AnnotatedInstance inst;
  std::map<int, std::vector<int>> parts;
  std::map<int, FinePoint> eta;
  std::map<int, int> eta_line;
  bool dims = false;
  for (const Line& l : ls) {
    const std::string& k = l.tok[0];
    if (!sr.seen() && gr.accept(l)) continue;
    if (sr.accept(l)) continue;
    if (sr.seen()) throw ParseError(l.number, "'" + k + "' after the sequence section");
    if (k == "dims") {
      arity(l, 3);
      inst.p = to_int(l, 1);
      inst.q = to_int(l, 2);
      dims = true;
    } else if (k == "part") {
      if (l.tok.size() < 3) throw ParseError(l.number, "part needs an index and members");
      int j = to_int(l, 1);
      std::vector<int> members;
      for (std::size_t i = 2; i < l.tok.size(); ++i) members.push_back(to_int(l, i));
      if (!parts.emplace(j, members).second) throw ParseError(l.number, "repeated part index");
    } else if (k == "eta") {
      arity(l, 4);
      int j = to_int(l, 1);
      if (!eta.emplace(j, FinePoint{to_int(l, 2), to_int(l, 3)}).second)
        throw ParseError(l.number, "repeated eta index");
      eta_line[j] = l.number;
    } else {
      unknown(l);
    }
  }
  const int end = last_line(ls);
  GraphFile gf = gr.finish(end);
  if (!gf.red.empty() || !gf.bags.empty())
    throw ParseError(end, "an instance graph has no red edges or bags");
  inst.graph = gf.graph();
  if (!dims) throw ParseError(end, "missing dims line");
  const int N = static_cast<int>(parts.size());
  int expect = 1;
  for (auto& [j, members] : parts) {
    if (j != expect++) throw ParseError(end, "part indices must be 1.." + std::to_string(N));
    inst.parts.push_back(members);
  }
  for (auto& [j, pt] : eta)
    if (j < 1 || j > N) throw ParseError(eta_line[j], "eta for an unknown part");
  if (static_cast<int>(eta.size()) != N) throw ParseError(end, "every part needs an eta line");
  for (auto& [j, pt] : eta) inst.eta.push_back(pt);
  inst.witness = sr.finish(end);
  if (inst.witness.n != inst.graph.n())
    throw ParseError(end, "sequence vertex count differs from the graph");
  return inst;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << "edge " << u << ' ' << v << '\n';
}

void write_capacitated(std::ostream& out, const CapacitatedGraph& cg) {
  write_graph(out, cg.graph);
  for (int v = 1; v <= cg.graph.n(); ++v) out << "cap " << v << ' ' << cg.cap[v] << '\n';
}

void write_trigraph(std::ostream& out, const Trigraph& t) {
  auto vs = t.vertices();
  bool plain = true;
  std::size_t originals = 0;
  for (int v : vs) {
    originals += t.bag(v).size();
    plain = plain && t.bag(v).size() == 1 && t.bag(v)[0] == v;
  }
  out << "graph " << originals << '\n';
  if (!plain)
    for (int v : vs) {
      out << "bag " << v;
      for (int x : t.bag(v)) out << ' ' << x;
      out << '\n';
    }
  for (int v : vs)
    for (int w : t.black(v))
      if (v < w) out << "edge " << v << ' ' << w << '\n';
  for (int v : vs)
    for (int w : t.red(v))
      if (v < w) out << "redge " << v << ' ' << w << '\n';
}

void write_sequence(std::ostream& out, const ContractionSequence& s) {
  if (s.start != 0) throw PreconditionError("only sequences starting at the graph can be written");
  out << "seq " << s.n << '\n';
  for (const Step& st : s.steps) out << "contract " << st.z << ' ' << st.u << ' ' << st.v << '\n';
}

void write_formula(std::ostream& out, const LayoutFormula& f) {
  out << "formula " << f.n << '\n';
  for (const auto& c : f.clauses)
    out << "clause " << c.sign << ' ' << c.rank << ' ' << c.lits[0] << ' ' << c.lits[1] << ' '
        << c.lits[2] << '\n';
}

void write_instance(std::ostream& out, const AnnotatedInstance& inst) {
  write_graph(out, inst.graph);
  out << "dims " << inst.p << ' ' << inst.q << '\n';
  for (std::size_t j = 0; j < inst.parts.size(); ++j) {
    out << "part " << j + 1;
    for (int v : inst.parts[j]) out << ' ' << v;
    out << '\n';
  }
  for (std::size_t j = 0; j < inst.eta.size(); ++j)
    out << "eta " << j + 1 << ' ' << inst.eta[j].row << ' ' << inst.eta[j].col << '\n';
  write_sequence(out, inst.witness);
}

void write_provenance(std::ostream& out, const ComposedInstance& c) {
  for (int v = 1; v <= c.graph.n(); ++v)
    out << "tag " << v << ' ' << c.provenance[v].row << ' ' << c.provenance[v].part << '\n';
}

void write_kernel_trace(std::ostream& out, const KernelInstance& k) {
  for (const RuleRecord& r : k.trace) out << "rule " << r.rule << " delete " << r.vertex << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace tww
