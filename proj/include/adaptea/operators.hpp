#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "adaptea/objectives.hpp"
#include "adaptea/random.hpp"
#include "adaptea/solution.hpp"

namespace adaptea {

// Static settings of the operator set. The differential weight is not fixed
// by the operator table and is configurable.
struct OperatorParams {
  double wright_ratio = 0.5;
  double extended_line_alpha = 0.3;
  double blx_alpha = 0.2;
  double differential_weight = 0.8;
  double raise_amplitude = 0.01;
  double creep_amplitude = 0.001;
};

struct OperatorConfig {
  OperatorId id;
  std::string_view name;
  std::size_t arity;
  double parameter;  // 0 for operators without a constant
};

std::array<OperatorConfig, kOperatorCount> operator_catalog(const OperatorParams& params = {});

std::string_view operator_name(OperatorId id);

// Shifts one gene by u * amplitude * range and clamps it. u is in [-1, 1].
double creep_shift(double gene, double lower, double upper, double amplitude, double u);

// Same with u drawn uniformly from [-1, 1).
double creep_shift(double gene, double lower, double upper, double amplitude, Random& rng);

// Index of the gene with the largest range-normalized difference; ties go to
// the lowest index.
std::size_t most_dissimilar_gene(std::span<const double> a, std::span<const double> b,
                                 const Bounds& bounds);

// Produces one offspring genome from parents sorted best-first. The result is
// clamped into the bounds. Throws std::invalid_argument when the parent count
// does not match the operator's arity.
std::vector<double> apply_operator(const OperatorConfig& op,
                                   std::span<const std::vector<double>> parents,
                                   const Bounds& bounds, Random& rng);

}  // namespace adaptea
