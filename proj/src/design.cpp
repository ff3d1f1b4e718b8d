#include "adaptea/design.hpp"

#include <stdexcept>

namespace adaptea {

DesignSpec make_adaptive_design(Measurement measurement, Interpretation interpretation) {
  if (interpretation == Interpretation::outlier && measurement != Measurement::age &&
      measurement != Measurement::rank) {
    throw std::invalid_argument("outlier interpretation needs A5 or A6 measurements");
  }
  DesignSpec design;
  design.name = to_string(measurement) + "-" + to_string(interpretation);
  design.measurement = measurement;
  design.interpretation = interpretation;
  design.initial.fill(1.0 / static_cast<double>(kOperatorCount));
  return design;
}

namespace {

std::vector<DesignSpec> build_catalog() {
  std::vector<DesignSpec> designs;

  DesignSpec sga1;
  sga1.name = "SGA1";
  sga1.initial[operator_index(OperatorId::uniform_crossover)] = 0.98;
  sga1.initial[operator_index(OperatorId::single_point_mutation)] = 0.02;
  designs.push_back(sga1);

  DesignSpec sga2;
  sga2.name = "SGA2";
  sga2.initial.fill(0.1);
  designs.push_back(sga2);

  designs.push_back(make_adaptive_design(Measurement::fitness, Interpretation::average));
  designs.push_back(make_adaptive_design(Measurement::fitness_ratio, Interpretation::average));
  designs.push_back(make_adaptive_design(Measurement::family_survival, Interpretation::average));
  designs.push_back(make_adaptive_design(Measurement::age, Interpretation::average));
  designs.push_back(make_adaptive_design(Measurement::age, Interpretation::outlier));
  designs.push_back(make_adaptive_design(Measurement::rank, Interpretation::average));
  designs.push_back(make_adaptive_design(Measurement::rank, Interpretation::outlier));
  return designs;
}

}  // namespace

const std::vector<DesignSpec>& design_catalog() {
  static const std::vector<DesignSpec> catalog = build_catalog();
  return catalog;
}

std::optional<DesignSpec> find_design(std::string_view name) {
  for (const auto& d : design_catalog()) {
    if (d.name == name) {
      return d;
    }
  }
  return std::nullopt;
}

}  // namespace adaptea
