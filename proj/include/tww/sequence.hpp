#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tww/trigraph.hpp"

namespace tww {

// Raised for structurally invalid sequences (dead ids, wrong fresh ids).
// A width violation is never reported through this exception.
struct SequenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Step {
  int z = 0, u = 0, v = 0;
  friend bool operator==(const Step&, const Step&) = default;
};

// Contractions over an id space whose first `n` ids are the initial vertices.
// `start` counts contractions already performed before steps[0], so step i
// (0-based) must mint id n + start + i + 1. Files always have start == 0.
struct ContractionSequence {
  int n = 0;
  int start = 0;
  std::vector<Step> steps;

  int next_id() const { return n + start + static_cast<int>(steps.size()) + 1; }
  // Appends a contraction of u and v and returns the minted id.
  int push(int u, int v) {
    int z = next_id();
    steps.push_back({z, u, v});
    return z;
  }
  friend bool operator==(const ContractionSequence&, const ContractionSequence&) = default;
};

struct Violation {
  int step = 0;    // 1-based index of the offending contraction, 0 = start
  int vertex = 0;
  int degree = 0;
};

struct WidthReport {
  int width = 0;
  int argmax_step = 0;  // first snapshot reaching `width` (0 = start)
  std::optional<Violation> violation;
};

constexpr int kUnbounded = 1 << 29;

// Snapshot visitor: called with the step index (0 = start) and the trigraph.
using SnapshotVisitor = std::function<void(int, const Trigraph&)>;

// Replays s on a copy of t, visiting every snapshot. Throws SequenceError.
void replay_visit(const Trigraph& t, const ContractionSequence& s,
                  const SnapshotVisitor& visit);
std::vector<Trigraph> replay(const Graph& g, const ContractionSequence& s);
Trigraph final_trigraph(const Trigraph& t, const ContractionSequence& s);

// Incremental width check: only z and its red neighbours can change degree.
WidthReport verify(const Graph& g, const ContractionSequence& s, int bound = kUnbounded);
WidthReport verify(const Trigraph& t, const ContractionSequence& s, int bound = kUnbounded);
// Full recomputation of every snapshot; cross-check for verify().
WidthReport verify_slow(const Trigraph& t, const ContractionSequence& s,
                        int bound = kUnbounded);

// Throws SequenceError when b does not continue a.
ContractionSequence concat(const ContractionSequence& a, const ContractionSequence& b);

// Maximum number of red edges over all snapshots.
long long max_red_edges(const Trigraph& t, const ContractionSequence& s);

}  // namespace tww
