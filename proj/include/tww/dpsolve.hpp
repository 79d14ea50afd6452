#pragma once

#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// Largest red component over every snapshot of s, the start included.
int check_component_bound(const Graph& g, const ContractionSequence& s);

// Exact optima by dynamic programming along s. Every snapshot must have red
// components of at most c vertices (c <= 20), otherwise PreconditionError.
// A partial sequence is finished by merging whatever components remain.
int min_vc_dp(const Graph& g, const ContractionSequence& s, int c);
int min_ds_dp(const Graph& g, const ContractionSequence& s, int c);

}  // namespace tww
