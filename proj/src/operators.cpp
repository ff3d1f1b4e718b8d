#include "adaptea/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace adaptea {

std::array<OperatorConfig, kOperatorCount> operator_catalog(const OperatorParams& params) {
  return {{
      {OperatorId::wright_heuristic, "Wright's Heuristic Crossover", 2, params.wright_ratio},
      {OperatorId::simple_crossover, "Simple Crossover", 2, 0.0},
      {OperatorId::extended_line, "Extended Line Crossover", 2, params.extended_line_alpha},
      {OperatorId::uniform_crossover, "Uniform Crossover", 2, 0.0},
      {OperatorId::blx_alpha, "BLX-alpha", 2, params.blx_alpha},
      {OperatorId::differential, "Differential Operator", 3, params.differential_weight},
      {OperatorId::swap, "Swap", 2, 0.0},
      {OperatorId::raise, "Raise", 1, params.raise_amplitude},
      {OperatorId::creep, "Real Number Creep", 1, params.creep_amplitude},
      {OperatorId::single_point_mutation, "Single Point Random Mutation", 1, 0.0},
  }};
}

std::string_view operator_name(OperatorId id) {
  return operator_catalog()[operator_index(id)].name;
}

double creep_shift(double gene, double lower, double upper, double amplitude, double u) {
  return std::clamp(gene + u * amplitude * (upper - lower), lower, upper);
}

double creep_shift(double gene, double lower, double upper, double amplitude, Random& rng) {
  return creep_shift(gene, lower, upper, amplitude, rng.uniform(-1.0, 1.0));
}

std::size_t most_dissimilar_gene(std::span<const double> a, std::span<const double> b,
                                 const Bounds& bounds) {
  std::size_t best = 0;
  double widest = -1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double gap = std::abs(a[i] - b[i]) / bounds.range(i);
    if (gap > widest) {
      widest = gap;
      best = i;
    }
  }
  return best;
}

std::vector<double> apply_operator(const OperatorConfig& op,
                                   std::span<const std::vector<double>> parents,
                                   const Bounds& bounds, Random& rng) {
  if (parents.size() != op.arity) {
    throw std::invalid_argument(std::string(op.name) + " needs " + std::to_string(op.arity) +
                                " parents, got " + std::to_string(parents.size()));
  }
  const std::size_t n = bounds.size();
  for (const auto& p : parents) {
    if (p.size() != n) {
      throw std::invalid_argument("apply_operator: parent dimension mismatch");
    }
  }

  std::vector<double> child(parents[0]);
  switch (op.id) {
    case OperatorId::wright_heuristic: {
      const auto& best = parents[0];
      const auto& worst = parents[1];
      for (std::size_t i = 0; i < n; ++i) {
        child[i] = op.parameter * (best[i] - worst[i]) + best[i];
      }
      break;
    }
    case OperatorId::simple_crossover: {
      // Cut k in [1, n-1]: genes before k from the better parent.
      const std::size_t cut = n > 1 ? 1 + rng.index(n - 1) : 0;
      for (std::size_t i = cut; i < n; ++i) {
        child[i] = parents[1][i];
      }
      break;
    }
    case OperatorId::extended_line: {
      for (std::size_t i = 0; i < n; ++i) {
        child[i] = parents[0][i] + op.parameter * (parents[1][i] - parents[0][i]);
      }
      break;
    }
    case OperatorId::uniform_crossover: {
      for (std::size_t i = 0; i < n; ++i) {
        if (rng.bernoulli(0.5)) {
          child[i] = parents[1][i];
        }
      }
      break;
    }
    case OperatorId::blx_alpha: {
      for (std::size_t i = 0; i < n; ++i) {
        const double lo = std::min(parents[0][i], parents[1][i]);
        const double hi = std::max(parents[0][i], parents[1][i]);
        const double spread = op.parameter * (hi - lo);
        child[i] = rng.uniform(lo - spread, hi + spread);
      }
      break;
    }
    case OperatorId::differential: {
      for (std::size_t i = 0; i < n; ++i) {
        child[i] = parents[0][i] + op.parameter * (parents[1][i] - parents[2][i]);
      }
      break;
    }
    case OperatorId::swap: {
      const std::size_t gene = most_dissimilar_gene(parents[0], parents[1], bounds);
      child[gene] = parents[1][gene];
      break;
    }
    case OperatorId::raise: {
      const double u = rng.uniform(-1.0, 1.0);
      for (std::size_t i = 0; i < n; ++i) {
        child[i] += u * op.parameter * bounds.range(i);
      }
      break;
    }
    case OperatorId::creep: {
      const std::size_t gene = rng.index(n);
      child[gene] =
          creep_shift(child[gene], bounds.lower[gene], bounds.upper[gene], op.parameter, rng);
      break;
    }
    case OperatorId::single_point_mutation: {
      const std::size_t gene = rng.index(n);
      child[gene] = rng.uniform(bounds.lower[gene], bounds.upper[gene]);
      break;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    child[i] = bounds.clamp(i, child[i]);
  }
  return child;
}

}  // namespace adaptea
