#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dqg/integrals.hpp"
#include "json.hpp"

namespace dqg {

// One complete measured Hopf algebroid as read from or written to a file.
struct Instance {
  std::string name;
  std::string description;
  BaseSpec base_spec;
  std::optional<std::vector<std::vector<Q>>> sqrt_cocycle;
  AlgebraSpec algebra;
  std::vector<Vec> delta;    // ambient tensor-square lift per basis element
  std::vector<Vec> counit;   // crossed-product coordinates per basis element
  GMatrix antipode;          // column j is S(e_j)
  IntegralData integrals;
};

// Validated objects built from an Instance. The cocycle is absent when no
// rational square root exists; the measured layer then stays empty.
struct Built {
  BasePtr base;
  AlgebroidPtr alg;
  HopfKitPtr kit;
  std::optional<Cocycle> coc;
  std::string cocycle_error;
  std::shared_ptr<Measured> measured;
};

Built build(const Instance& inst);

Instance example_pair(const std::vector<std::string>& points, const std::vector<Q>& weight);
// Base spec for a crossed product; the instance uses phi(b g) = delta_{g,e} b and psi = phi o S.
// Throws CocycleError when the square-root cocycle is not rational.
Instance example_crossed(const BaseSpec& base);
Instance example_group(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table);

// Sweedler's Hopf algebra over the trivial base, with phi = delta_gx and
// psi = delta_x. S^2 is not the identity; the measured checks fail on it.
Instance example_sweedler4();

// Named finite groups: "Z<n>" cyclic, "S3" symmetric group.
std::pair<std::vector<std::string>, std::vector<std::vector<int>>> named_group(const std::string& name);

// Instance C: X = {1,2,3}, Z/2 swapping 1 and 2, weight (1,4,1).
BaseSpec instance_c_base(const std::vector<Q>& weight = {Q(1), Q(4), Q(1)});

nlohmann::json to_json(const Instance& inst);
// Throws ValidationError listing every structural problem.
Instance from_json(const nlohmann::json& j);
Instance load_instance(const std::string& path);

nlohmann::json scalar_json(const GQ& z);
GQ scalar_from_json(const nlohmann::json& j);

}  // namespace dqg
