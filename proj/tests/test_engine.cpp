#include <doctest.h>

#include <cmath>
#include <cstring>
#include <map>
#include <set>
#include <stdexcept>

#include "adaptea/engine.hpp"

using namespace adaptea;

namespace {

double constant_zero(std::span<const double>) { return 0.0; }

ObjectiveSpec flat_problem() {
  return ObjectiveSpec{ProblemId::F5, "flat", 3, Bounds{{-1, -1, -1}, {1, 1, 1}},
                       {0, 0, 0},     0.0,    constant_zero};
}

Solution member(double fitness, std::uint64_t id = 0) {
  Solution s;
  s.id = id;
  s.genome = {fitness};
  s.fitness = fitness;
  return s;
}

ProbabilityVector only(OperatorId id) {
  ProbabilityVector p{};
  p[operator_index(id)] = 1.0;
  return p;
}

void check_population(const Population& pop, const ObjectiveSpec& spec) {
  REQUIRE(pop.members.size() == 30);
  std::set<std::vector<double>> genomes;
  std::set<std::uint64_t> ids;
  for (const auto& s : pop.members) {
    CHECK(spec.bounds.contains(s.genome));
    CHECK(s.fitness == evaluate(spec, s.genome));
    genomes.insert(s.genome);
    ids.insert(s.id);
  }
  CHECK(genomes.size() == 30);
  CHECK(ids.size() == 30);
}

}  // namespace

TEST_CASE("parent distance") {
  const Bounds unit{{0.0}, {1.0}};
  CHECK(parent_distance(std::vector<double>{0.3}, std::vector<double>{0.3}, unit) == 0.0);
  CHECK(parent_distance(std::vector<double>{0.0}, std::vector<double>{1.0}, unit) == 1.0);
  const Bounds plane{{0, -5}, {10, 5}};
  CHECK(parent_distance(std::vector<double>{0, 0}, std::vector<double>{6, 8}, plane) ==
        doctest::Approx(1.0));
}

TEST_CASE("diversity-controlled mutation probability") {
  const DiversityControl ctl;
  CHECK(mutation_probability(0.0, ctl) == doctest::Approx(0.52));
  CHECK(mutation_probability(0.001, ctl) == doctest::Approx(0.0205));
  CHECK(mutation_probability(10.0, ctl) == doctest::Approx(0.02));
  CHECK_THROWS_AS(mutation_probability(-1.0, ctl), std::invalid_argument);
  double previous = mutation_probability(0.0, ctl);
  for (double d = 1e-5; d < 0.005; d += 1e-5) {
    const double p = mutation_probability(d, ctl);
    CHECK(p < previous);
    CHECK(p >= ctl.base_probability);
    CHECK(p <= ctl.base_probability + 0.5);
    previous = p;
  }
}

TEST_CASE("effective probabilities") {
  ProbabilityVector sga1{};
  sga1[operator_index(OperatorId::uniform_crossover)] = 0.98;
  sga1[operator_index(OperatorId::single_point_mutation)] = 0.02;
  const auto p = effective_probabilities(sga1, 0.02);
  CHECK(p[operator_index(OperatorId::uniform_crossover)] == doctest::Approx(0.98));
  CHECK(p[operator_index(OperatorId::single_point_mutation)] == doctest::Approx(0.02));

  ProbabilityVector uniform;
  uniform.fill(0.1);
  const auto q = effective_probabilities(uniform, 0.52);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(q[i] == doctest::Approx(0.48 / 9.0));
  }
  CHECK(q[9] == doctest::Approx(0.52));

  const auto r = effective_probabilities(only(OperatorId::single_point_mutation), 0.02);
  CHECK(r[9] == 1.0);
}

TEST_CASE("binary tournament") {
  Random rng(1);
  const std::vector<Solution> single{member(-3.0)};
  for (int i = 0; i < 10; ++i) {
    CHECK(tournament_select(single, rng).fitness == -3.0);
  }
  CHECK_THROWS_AS(tournament_select(std::vector<Solution>{}, rng), std::invalid_argument);

  // Replay the two draws to predict the winner.
  const std::vector<Solution> pool{member(-1.0, 0), member(-5.0, 1), member(-5.0, 2),
                                   member(-0.5, 3)};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Random replay(seed);
    const auto first = replay.index(pool.size());
    const auto second = replay.index(pool.size());
    const auto expected = pool[second].fitness > pool[first].fitness ? second : first;
    Random actual(seed);
    CHECK(tournament_index(pool, actual) == expected);
  }
}

TEST_CASE("initialization") {
  for (const auto& spec : problem_catalog()) {
    Random a(4);
    Random b(4);
    const Population pa = initialize(spec, a);
    const Population pb = initialize(spec, b);
    check_population(pa, spec);
    CHECK(pa.generation == 0);
    for (std::size_t i = 0; i < 30; ++i) {
      CHECK(pa.members[i].genome == pb.members[i].genome);
      CHECK_FALSE(pa.members[i].creator.has_value());
    }
  }
  Random rng(8);
  for (const auto& s : initialize(problem(ProblemId::F1), rng).members) {
    for (double v : s.genome) {
      CHECK(std::abs(v) <= 65.536);
    }
  }
}

TEST_CASE("a generation keeps the population valid and records every reproduction") {
  const auto& spec = problem(ProblemId::F2);
  Random rng(12);
  Population pop = initialize(spec, rng);
  ProbabilityVector weights;
  weights.fill(0.1);
  for (int g = 0; g < 50; ++g) {
    std::set<std::uint64_t> pool_ids;
    for (const auto& s : pop.members) {
      pool_ids.insert(s.id);
    }
    const GenerationResult step = step_generation(pop, weights, spec, rng);
    CHECK(step.population.generation == pop.generation + 1);
    REQUIRE(step.events.size() == 30);
    for (const auto& e : step.events) {
      pool_ids.insert(e.offspring_id);
      CHECK(e.parent_ids.size() == operator_catalog()[operator_index(e.op)].arity);
      CHECK(e.parents_survived.size() == e.parent_ids.size());
      CHECK(std::is_sorted(e.parent_fitnesses.rbegin(), e.parent_fitnesses.rend()));
    }
    check_population(step.population, spec);
    std::size_t foreign = 0;
    for (const auto& s : step.population.members) {
      foreign += pool_ids.contains(s.id) ? 0 : 1;
    }
    // Survivors are tournament winners from parents + offspring, or immigrants.
    CHECK(foreign == step.immigrants);
    pop = step.population;
  }
}

TEST_CASE("with only single point mutation every child differs from its parent in one gene") {
  const auto& spec = problem(ProblemId::F4);
  Random rng(3);
  Population pop = initialize(spec, rng);
  const GenerationResult step =
      step_generation(pop, only(OperatorId::single_point_mutation), spec, rng);
  std::map<std::uint64_t, const Solution*> parents;
  for (const auto& s : pop.members) {
    parents[s.id] = &s;
  }
  for (const auto& e : step.events) {
    CHECK(e.op == OperatorId::single_point_mutation);
    REQUIRE(e.parent_ids.size() == 1);
    const auto* parent = parents.at(e.parent_ids[0]);
    for (const auto& s : step.population.members) {
      if (s.id != e.offspring_id) {
        continue;
      }
      int changed = 0;
      for (std::size_t i = 0; i < s.genome.size(); ++i) {
        changed += s.genome[i] != parent->genome[i];
      }
      CHECK(changed <= 1);
    }
  }
}

TEST_CASE("flat fitness makes culling uniform over parents and offspring") {
  const ObjectiveSpec spec = flat_problem();
  Random rng(21);
  Population pop = initialize(spec, rng);
  ProbabilityVector weights;
  weights.fill(0.1);
  std::size_t offspring_survivors = 0;
  std::size_t survivors = 0;
  for (int g = 0; g < 300; ++g) {
    const GenerationResult step = step_generation(pop, weights, spec, rng);
    for (const auto& e : step.events) {
      offspring_survivors += e.offspring_survived ? 1 : 0;
    }
    survivors += step.population.members.size();
    pop = step.population;
  }
  const double share = static_cast<double>(offspring_survivors) / static_cast<double>(survivors);
  CHECK(share == doctest::Approx(0.5).epsilon(0.06));
}

TEST_CASE("seeded generations are bitwise reproducible") {
  const auto& spec = problem(ProblemId::F5);
  ProbabilityVector weights;
  weights.fill(0.1);
  const auto one = [&] {
    Random rng(99);
    Population pop = initialize(spec, rng);
    return step_generation(pop, weights, spec, rng).population;
  };
  const Population a = one();
  const Population b = one();
  REQUIRE(a.members.size() == b.members.size());
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    CHECK(a.members[i].id == b.members[i].id);
    CHECK(std::memcmp(a.members[i].genome.data(), b.members[i].genome.data(),
                      a.members[i].genome.size() * sizeof(double)) == 0);
    CHECK(std::memcmp(&a.members[i].fitness, &b.members[i].fitness, sizeof(double)) == 0);
  }
}

TEST_CASE("a collapsed pool is refilled with immigrants") {
  // Two distinct members only: culling cannot find 30 unique genomes.
  const auto& spec = problem(ProblemId::F5);
  Population pop;
  for (std::uint64_t i = 0; i < 30; ++i) {
    Solution s;
    s.id = i;
    s.genome = {static_cast<double>(i % 2), 0.0};
    s.fitness = evaluate(spec, s.genome);
    pop.members.push_back(s);
  }
  pop.next_id = 30;
  ProbabilityVector weights{};
  weights[operator_index(OperatorId::uniform_crossover)] = 1.0;
  EngineConfig config;
  config.diversity_control = false;
  Random rng(5);
  const GenerationResult step = step_generation(pop, weights, spec, rng, config);
  CHECK(step.population.members.size() == 30);
  CHECK(step.immigrants > 0);
  std::set<std::vector<double>> genomes;
  for (const auto& s : step.population.members) {
    genomes.insert(s.genome);
  }
  CHECK(genomes.size() == 30);
}
