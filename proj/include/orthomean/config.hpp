#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthomean/equilibrium.hpp"
#include "orthomean/family.hpp"
#include "orthomean/summation.hpp"

namespace orthomean {

// Serializable description of a coefficient family.
struct FamilySpec {
  enum class Kind { ultraspherical, jacobi_shift, constant, table };
  Kind kind = Kind::ultraspherical;
  double lambda = 0.5;         // ultraspherical
  double lambda1 = 0.0;        // jacobi_shift
  double lambda2 = 0.0;
  std::size_t max_index = 64;  // constant (built-in Legendre table)
  std::string path;            // table (CSV file)
  double mass = 2.0;           // constant / table

  std::string to_json() const;
  static FamilySpec from_json(const std::string& text);

  CoefficientFamily build(std::size_t scan_j = 400, std::size_t scan_k = 400) const;
};

// Serializable description of a summation method.
struct MethodSpec {
  enum class Kind { arithmetic, legendre, cesaro, gegenbauer, identity, custom };
  Kind kind = Kind::cesaro;
  double alpha = 1.0;      // cesaro
  double nu = 0.5;         // gegenbauer
  std::string sigma_file;  // custom (CSV "k,sigma")

  std::string to_json() const;
  static MethodSpec from_json(const std::string& text);

  NorlundMethod build() const;
};

struct RunConfig {
  FamilySpec family;
  MethodSpec method;
  std::vector<std::size_t> n_list = {100};
  std::size_t L = 8;
  std::string output = ".";
  std::size_t bins = 50;

  std::string to_json() const;
  static RunConfig from_json(const std::string& text);
  void validate(std::size_t max_L) const;
};

// Closed-form limit measure implied by a family/method combination, when one
// is known: shift families pair with the Beta-type measure of the matching
// Cesaro order, constant families (and the identity scheme) with the arcsine
// measure at the coefficient tail.
EquilibriumMeasure pick_equilibrium(const FamilySpec& family, const MethodSpec& method);

// Matching closed-form Sigma_{l_a, l_b}, same selection rule.
double pick_sigma_closed_form(const FamilySpec& family, const MethodSpec& method,
                              std::size_t l_a, std::size_t l_b);

}  // namespace orthomean
