#include "tww/recognize.hpp"

#include <algorithm>

#include "tww/modular.hpp"

namespace tww {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Tww0: return "tww0";
    case Verdict::Tww1: return "tww1";
    case Verdict::Above1: return "above1";
  }
  return "above1";
}

std::vector<std::pair<int, int>> safe_contractions(const Trigraph& t) {
  if (t.red_edge_count() != 1)
    throw PreconditionError("safe_contractions needs exactly one red edge");
  int u = 0, v = 0;
  for (int x : t.vertices())
    if (!t.red(x).empty()) {
      u = x;
      v = t.red(x).front();
      break;
    }
  std::vector<int> vs = t.vertices();
  std::vector<std::pair<int, int>> out;
  for (int p : {u, v})
    for (int w : vs) {
      if (w == p) continue;
      bool ok = true;
      for (int x : vs) {
        if (x == w || x == p) continue;
        EdgeKind tp = t.edge(p, x), tw = t.edge(w, x);
        if ((tp == EdgeKind::None && tw != EdgeKind::None) ||
            (tp == EdgeKind::Black && tw != EdgeKind::Black)) {
          ok = false;
          break;
        }
      }
      if (ok) out.emplace_back(w, p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Replays `sub` (over local ids 1..sub.n) onto `s`, where local id i is
// global id ids[i-1]. Returns the global id of the last minted vertex, or
// the single id when sub is empty.
int embed(Trigraph* t, ContractionSequence& s, const std::vector<int>& ids,
          const ContractionSequence& sub) {
  std::vector<int> map(static_cast<std::size_t>(sub.n) + sub.steps.size() + 1, 0);
  for (int i = 1; i <= sub.n; ++i) map[i] = ids[i - 1];
  int last = ids.empty() ? 0 : ids.front();
  for (const Step& st : sub.steps) {
    int z = s.push(map[st.u], map[st.v]);
    if (t) t->contract_in_place(map[st.u], map[st.v], z);
    map[st.z] = z;
    last = z;
  }
  return last;
}

Graph black_graph(const Trigraph& t, const std::vector<int>& ids) {
  Graph h(static_cast<int>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (t.edge(ids[i], ids[j]) != EdgeKind::None) h.add_edge(int(i) + 1, int(j) + 1);
  return h;
}

std::optional<ContractionSequence> solve(const Graph& h, bool zero_only);

std::optional<ContractionSequence> prime_driver(const Graph& h) {
  const int n = h.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      std::vector<int> diff;
      std::set_symmetric_difference(h.neighbors(a).begin(), h.neighbors(a).end(),
                                    h.neighbors(b).begin(), h.neighbors(b).end(),
                                    std::back_inserter(diff));
      std::erase_if(diff, [&](int x) { return x == a || x == b; });
      if (diff.size() != 1) continue;

      Trigraph t(h);
      ContractionSequence s{n, 0, {}};
      t.contract_in_place(a, b, s.push(a, b));
      bool ok = true;
      while (t.vertex_count() > 1) {
        long long reds = t.red_edge_count();
        if (reds > 1) {
          ok = false;
          break;
        }
        if (reds == 0) {
          std::vector<int> ids = t.vertices();
          auto sub = solve(black_graph(t, ids), false);
          if (!sub) ok = false;
          else embed(&t, s, ids, *sub);
          break;
        }
        auto safe = safe_contractions(t);
        int u, v;
        if (!safe.empty()) {
          u = safe.front().first;
          v = safe.front().second;
        } else {
          u = 0;
          for (int x : t.vertices())
            if (!t.red(x).empty()) {
              u = x;
              break;
            }
          v = t.red(u).front();
        }
        t.contract_in_place(u, v, s.push(u, v));
      }
      if (ok) return s;
    }
  return std::nullopt;
}

// Full sequence for h (local ids), or nothing when the width target fails.
std::optional<ContractionSequence> solve(const Graph& h, bool zero_only) {
  const int n = h.n();
  ContractionSequence s{n, 0, {}};
  if (n <= 1) return s;
  if (is_complete(h) || is_edgeless(h)) {
    int cur = 1;
    for (int v = 2; v <= n; ++v) cur = s.push(cur, v);
    return s;
  }
  ModularPartition mp = maximal_modular_partition(h);
  if (mp.prime) return zero_only ? std::nullopt : prime_driver(h);

  Trigraph t(h);
  std::vector<int> reps;
  for (const auto& part : mp.parts.parts) {
    auto sub = solve(h.induced(part), zero_only);
    if (!sub) return std::nullopt;
    reps.push_back(embed(&t, s, part, *sub));
  }
  auto top = solve(black_graph(t, reps), zero_only);
  if (!top) return std::nullopt;
  embed(&t, s, reps, *top);
  return s;
}

}  // namespace

RecognitionResult recognize_tww0(const Graph& g) {
  RecognitionResult r;
  if (auto s = solve(g, true)) {
    r.verdict = Verdict::Tww0;
    r.witness = std::move(s);
  }
  return r;
}

RecognitionResult recognize_tww1(const Graph& g) {
  RecognitionResult r = recognize_tww0(g);
  if (r.verdict == Verdict::Tww0) return r;
  if (auto s = solve(g, false)) {
    r.verdict = Verdict::Tww1;
    r.witness = std::move(s);
  }
  return r;
}

}  // namespace tww
