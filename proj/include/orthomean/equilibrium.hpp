#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "orthomean/family.hpp"
#include "orthomean/mean_limits.hpp"

namespace orthomean {

// Closed-form limit measure with density, CDF and exact moments.
class EquilibriumMeasure {
 public:
  enum class Kind { arcsine, gegenbauer, uniform, affine_gegenbauer };

  Kind kind() const { return kind_; }
  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }
  double density(double x) const;  // 0 outside the support
  double cdf(double x) const;      // clamped to [0,1]
  double moment(std::size_t l) const;

  EquilibriumMeasure(Kind kind, double lo, double hi,
                     std::function<double(double)> density,
                     std::function<double(double)> cdf,
                     std::function<double(std::size_t)> moment);

 private:
  Kind kind_;
  double lo_, hi_;
  std::function<double(double)> density_;
  std::function<double(double)> cdf_;
  std::function<double(std::size_t)> moment_;
};

// Arcsine measure on [a-2b, a+2b] with density 1/(pi sqrt(4b^2 - (x-a)^2)).
EquilibriumMeasure arcsine_measure(double a, double b);

// Beta-type measure (1-x^2)^{(alpha-1)/2} / m^{(alpha/2)} on [-1,1];
// alpha = 1 is the uniform measure.
EquilibriumMeasure gegenbauer_equilibrium(double alpha);

EquilibriumMeasure uniform_measure();

// Normalizer m^{(lambda)} = int_{-1}^1 (1-x^2)^{lambda-1/2} dx.
double gegenbauer_mass(double lambda);

// Image of a measure supported on [-1,1] under T y = 2 b y + a.
EquilibriumMeasure affine_transfer(const EquilibriumMeasure& src, double a, double b);

// Closed-form Sigma_{l_a, l_b} limits.  All of them require even l_b (odd
// combinations throw std::domain_error); the delta_{0, l_a} factor is part of
// the shift-family formulas.
double sigma_uniform_nevai(double a, double b, std::size_t l_a, std::size_t l_b);
double sigma_arithmetic(std::size_t l_a, std::size_t l_b);
double sigma_cesaro(double alpha, std::size_t l_a, std::size_t l_b);
double sigma_gegenbauer(double nu, std::size_t l_a, std::size_t l_b);
double sigma_affine_cesaro(double a, double b, double alpha, std::size_t l_a,
                           std::size_t l_b);

// |LHS - RHS| of the ultraspherical addition formula
// 1/m^{(lambda)} = sum_k sigma^{(G,lambda)}_{n,k} (1-x^2)^{n-k} p_k^{(n-k,lambda)}(x)^2.
// An exact finite identity; the residual is pure rounding.
double addition_formula_residual(double lambda, std::size_t n, double x);

// |LHS - RHS| of the printed Legendre form
// (2n+1)/2 = p_n^{(0)}(x)^2 + 2 sum_{k=1}^n (1-x^2)^k p_{n-k}^{(k)}(x)^2.
double addition_formula_residual_legendre(std::size_t n, double x);

// Weighted Kolmogorov-Smirnov distance between a root sample and a measure.
double ks_distance(const RootSample& sample, const EquilibriumMeasure& measure);

}  // namespace orthomean
