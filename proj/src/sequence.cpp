#include "tww/sequence.hpp"

#include <string>

namespace tww {

namespace {

void check_start(const Trigraph& t, const ContractionSequence& s) {
  if (t.original_count() != s.n)
    throw SequenceError("sequence is over " + std::to_string(s.n) +
                        " initial ids but the trigraph has " +
                        std::to_string(t.original_count()));
  if (t.max_id() > s.n + s.start)
    throw SequenceError("sequence start does not match the trigraph's id space");
}

void apply_step(Trigraph& t, const ContractionSequence& s, std::size_t i) {
  const Step& st = s.steps[i];
  const int want = s.n + s.start + static_cast<int>(i) + 1;
  const int idx = static_cast<int>(i) + 1;
  if (st.z != want)
    throw SequenceError("step " + std::to_string(idx) + ": fresh id must be " +
                        std::to_string(want) + ", got " + std::to_string(st.z));
  if (st.u == st.v)
    throw SequenceError("step " + std::to_string(idx) + ": contracts a vertex with itself");
  if (!t.alive(st.u) || !t.alive(st.v))
    throw SequenceError("step " + std::to_string(idx) + ": vertex " +
                        std::to_string(t.alive(st.u) ? st.v : st.u) + " is not live");
  t.contract_in_place(st.u, st.v, st.z);
}

void record(WidthReport& r, int step, int vertex, int degree, int bound) {
  if (degree > r.width) {
    r.width = degree;
    r.argmax_step = step;
  }
  if (degree > bound && !r.violation) r.violation = Violation{step, vertex, degree};
}

}  // namespace

void replay_visit(const Trigraph& t0, const ContractionSequence& s,
                  const SnapshotVisitor& visit) {
  check_start(t0, s);
  Trigraph t = t0;
  visit(0, t);
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    apply_step(t, s, i);
    visit(static_cast<int>(i) + 1, t);
  }
}

std::vector<Trigraph> replay(const Graph& g, const ContractionSequence& s) {
  std::vector<Trigraph> out;
  replay_visit(Trigraph(g), s, [&](int, const Trigraph& t) { out.push_back(t); });
  return out;
}

Trigraph final_trigraph(const Trigraph& t0, const ContractionSequence& s) {
  check_start(t0, s);
  Trigraph t = t0;
  for (std::size_t i = 0; i < s.steps.size(); ++i) apply_step(t, s, i);
  return t;
}

WidthReport verify(const Graph& g, const ContractionSequence& s, int bound) {
  return verify(Trigraph(g), s, bound);
}

WidthReport verify(const Trigraph& t0, const ContractionSequence& s, int bound) {
  check_start(t0, s);
  WidthReport r;
  Trigraph t = t0;
  for (int v : t.vertices()) record(r, 0, v, t.red_degree(v), bound);
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    apply_step(t, s, i);
    const int step = static_cast<int>(i) + 1;
    const int z = s.steps[i].z;
    // Ascending ids, so the reported violation matches a full scan.
    for (int x : t.red(z)) record(r, step, x, t.red_degree(x), bound);
    record(r, step, z, t.red_degree(z), bound);
  }
  return r;
}

WidthReport verify_slow(const Trigraph& t0, const ContractionSequence& s, int bound) {
  WidthReport r;
  replay_visit(t0, s, [&](int step, const Trigraph& t) {
    for (int v : t.vertices()) record(r, step, v, t.red_degree(v), bound);
  });
  return r;
}

ContractionSequence concat(const ContractionSequence& a, const ContractionSequence& b) {
  if (a.n != b.n)
    throw SequenceError("concat: sequences use different initial id ranges");
  if (b.start != a.start + static_cast<int>(a.steps.size()))
    throw SequenceError("concat: second sequence does not continue the first");
  ContractionSequence out = a;
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  return out;
}

long long max_red_edges(const Trigraph& t0, const ContractionSequence& s) {
  long long best = 0;
  replay_visit(t0, s, [&](int, const Trigraph& t) {
    best = std::max(best, t.red_edge_count());
  });
  return best;
}

}  // namespace tww
