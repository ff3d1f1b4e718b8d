#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adaptea/adapt.hpp"
#include "adaptea/credit.hpp"
#include "adaptea/interpret.hpp"

namespace adaptea {

// An EA design: a static operator mix (SGA1, SGA2) or a measurement and
// interpretation pair driving feedback adaptation of operators 1-9. Diversity
// control always sets the single point mutation probability.
struct DesignSpec {
  std::string name;
  std::optional<Measurement> measurement;
  std::optional<Interpretation> interpretation;
  ProbabilityVector initial{};

  bool adaptive() const { return measurement.has_value(); }
};

const std::vector<DesignSpec>& design_catalog();
std::optional<DesignSpec> find_design(std::string_view name);

// Builds "A<k>-I<j>" for any measurement/interpretation pair. Outlier scoring
// requires A5 or A6; anything else throws std::invalid_argument.
DesignSpec make_adaptive_design(Measurement measurement, Interpretation interpretation);

}  // namespace adaptea
