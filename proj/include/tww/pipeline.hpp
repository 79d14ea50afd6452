#pragma once

#include <vector>

#include "tww/compose.hpp"
#include "tww/reduction.hpp"
#include "tww/sequence.hpp"

namespace tww {

struct HardnessReport {
  std::vector<InstanceReport> instances;
  ComposedInstance composed;
  WidthReport width;  // of the composed witness against bound 4
  bool ok() const;
};

// reduce_3sat on every formula, validate, compose, verify. Throws
// PreconditionError for an empty list or formulas of different shape.
HardnessReport pipeline_hardness(const std::vector<LayoutFormula>& formulas);

}  // namespace tww
