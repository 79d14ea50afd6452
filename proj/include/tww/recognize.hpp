#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

namespace tww {

enum class Verdict { Tww0, Tww1, Above1 };
const char* to_string(Verdict v);

struct RecognitionResult {
  Verdict verdict = Verdict::Above1;
  std::optional<ContractionSequence> witness;
};

// Cograph test; the witness contracts twins only. A failed test reports
// Above1 for lack of a finer verdict, so callers should read it as "not 0".
RecognitionResult recognize_tww0(const Graph& g);
// Twin-width at most one; every snapshot of the witness has <= 1 red edge.
RecognitionResult recognize_tww1(const Graph& g);

// Pairs (w, p) with p an endpoint of the single red edge such that
// contracting w into p yields the induced subtrigraph without w.
// Throws PreconditionError unless t has exactly one red edge.
std::vector<std::pair<int, int>> safe_contractions(const Trigraph& t);

}  // namespace tww
