#include "tww/pipeline.hpp"

#include <string>

namespace tww {

bool HardnessReport::ok() const {
  for (const auto& r : instances)
    if (!r.ok()) return false;
  return !width.violation && composed.max_c2p <= 4;
}

HardnessReport pipeline_hardness(const std::vector<LayoutFormula>& formulas) {
  if (formulas.empty()) throw PreconditionError("pipeline needs at least one formula");
  HardnessReport rep;
  std::vector<AnnotatedInstance> instances;
  for (const auto& f : formulas) {
    Reduction r = reduce_3sat(f);
    const auto& first = instances.empty() ? r.instance : instances.front();
    if (r.instance.p != first.p || r.instance.q != first.q)
      throw PreconditionError("formula " + std::to_string(instances.size() + 1) +
                              " yields a " + std::to_string(r.instance.p) + " x " +
                              std::to_string(r.instance.q) + " grid, expected " +
                              std::to_string(first.p) + " x " + std::to_string(first.q));
    rep.instances.push_back(validate_instance(r.instance));
    instances.push_back(std::move(r.instance));
  }
  rep.composed = or_cross_compose(instances);
  rep.width = verify(rep.composed.graph, rep.composed.witness, 4);
  return rep;
}

}  // namespace tww
