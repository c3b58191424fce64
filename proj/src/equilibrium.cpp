#include "orthomean/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "orthomean/special.hpp"
#include "orthomean/summation.hpp"
#include "orthomean/tridiag.hpp"

namespace orthomean {

EquilibriumMeasure::EquilibriumMeasure(Kind kind, double lo, double hi,
                                       std::function<double(double)> density,
                                       std::function<double(double)> cdf,
                                       std::function<double(std::size_t)> moment)
    : kind_(kind),
      lo_(lo),
      hi_(hi),
      density_(std::move(density)),
      cdf_(std::move(cdf)),
      moment_(std::move(moment)) {}

double EquilibriumMeasure::density(double x) const {
  if (x <= lo_ || x >= hi_) return 0.0;
  return density_(x);
}

double EquilibriumMeasure::cdf(double x) const {
  if (x <= lo_) return 0.0;
  if (x >= hi_) return 1.0;
  return std::clamp(cdf_(x), 0.0, 1.0);
}

double EquilibriumMeasure::moment(std::size_t l) const { return moment_(l); }

EquilibriumMeasure arcsine_measure(double a, double b) {
  if (!(b > 0.0)) throw std::invalid_argument("arcsine_measure: b must be > 0");
  auto density = [a, b](double x) {
    const double u = x - a;
    return 1.0 / (M_PI * std::sqrt(4.0 * b * b - u * u));
  };
  auto cdf = [a, b](double x) {
    return std::asin((x - a) / (2.0 * b)) / M_PI + 0.5;
  };
  auto moment = [a, b](std::size_t l) {
    // binomial transfer of the centered moments C(2p, p) b^{2p}
    double sum = 0.0;
    for (std::size_t i = 0; i <= l; i += 2) {
      double term = binomial(static_cast<double>(l), static_cast<double>(i)) *
                    binomial(static_cast<double>(i), static_cast<double>(i / 2));
      for (std::size_t j = 0; j < i; ++j) term *= b;
      for (std::size_t j = 0; j < l - i; ++j) term *= a;
      sum += term;
    }
    return sum;
  };
  return EquilibriumMeasure(EquilibriumMeasure::Kind::arcsine, a - 2.0 * b,
                            a + 2.0 * b, density, cdf, moment);
}

double gegenbauer_mass(double lambda) {
  // sqrt(pi) Gamma(lambda + 1/2) / Gamma(lambda + 1)
  return std::exp(0.5 * std::log(M_PI) + log_gamma(lambda + 0.5) -
                  log_gamma(lambda + 1.0));
}

namespace {

std::function<double(std::size_t)> gegenbauer_moment_fn(double alpha) {
  return [alpha](std::size_t l) {
    if (l % 2 == 1) return 0.0;
    // m_{j+2} = m_j (j+1)/(j+alpha+2)
    double m = 1.0;
    for (std::size_t j = 0; j < l; j += 2) m *= (j + 1.0) / (j + alpha + 2.0);
    return m;
  };
}

}  // namespace

EquilibriumMeasure gegenbauer_equilibrium(double alpha) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("gegenbauer_equilibrium: alpha must be > 0");
  const double mass = gegenbauer_mass(alpha / 2.0);
  const double expo = (alpha - 1.0) / 2.0;
  auto density = [mass, expo](double x) {
    return std::pow(1.0 - x * x, expo) / mass;
  };
  const double s = (alpha + 1.0) / 2.0;
  auto cdf = [s](double x) { return reg_inc_beta(s, s, 0.5 * (x + 1.0)); };
  const auto kind = (alpha == 1.0) ? EquilibriumMeasure::Kind::uniform
                                   : EquilibriumMeasure::Kind::gegenbauer;
  return EquilibriumMeasure(kind, -1.0, 1.0, density, cdf,
                            gegenbauer_moment_fn(alpha));
}

EquilibriumMeasure uniform_measure() { return gegenbauer_equilibrium(1.0); }

EquilibriumMeasure affine_transfer(const EquilibriumMeasure& src, double a, double b) {
  if (!(b > 0.0)) throw std::invalid_argument("affine_transfer: b must be > 0");
  if (std::fabs(src.support_lo() + 1.0) > 1e-9 ||
      std::fabs(src.support_hi() - 1.0) > 1e-9)
    throw std::invalid_argument("affine_transfer: source must be supported on [-1,1]");
  auto density = [src, a, b](double x) {
    return src.density((x - a) / (2.0 * b)) / (2.0 * b);
  };
  auto cdf = [src, a, b](double x) { return src.cdf((x - a) / (2.0 * b)); };
  auto moment = [src, a, b](std::size_t l) {
    double sum = 0.0;
    for (std::size_t i = 0; i <= l; ++i) {
      double term = binomial(static_cast<double>(l), static_cast<double>(i)) *
                    src.moment(i);
      for (std::size_t j = 0; j < i; ++j) term *= 2.0 * b;
      for (std::size_t j = 0; j < l - i; ++j) term *= a;
      sum += term;
    }
    return sum;
  };
  return EquilibriumMeasure(EquilibriumMeasure::Kind::affine_gegenbauer,
                            a - 2.0 * b, a + 2.0 * b, density, cdf, moment);
}

namespace {

void require_even(std::size_t l_b, const char* where) {
  if (l_b % 2 != 0)
    throw std::domain_error(std::string(where) + ": l_b must be even");
}

double ipow(double x, std::size_t e) {
  double r = 1.0;
  for (std::size_t i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

double sigma_uniform_nevai(double a, double b, std::size_t l_a, std::size_t l_b) {
  require_even(l_b, "sigma_uniform_nevai");
  return ipow(a, l_a) * ipow(b, l_b);
}

double sigma_arithmetic(std::size_t l_a, std::size_t l_b) {
  require_even(l_b, "sigma_arithmetic");
  if (l_a >= 1) return 0.0;
  return std::exp(log_gamma(1.5) + log_gamma((l_b + 2.0) / 2.0) -
                  log_gamma((l_b + 3.0) / 2.0) - l_b * std::log(2.0));
}

double sigma_cesaro(double alpha, std::size_t l_a, std::size_t l_b) {
  require_even(l_b, "sigma_cesaro");
  if (!(alpha > 0.0)) throw std::domain_error("sigma_cesaro: alpha must be > 0");
  if (l_a >= 1) return 0.0;
  return ipow(0.5, l_b) / binomial((alpha + l_b) / 2.0, alpha / 2.0);
}

double sigma_gegenbauer(double nu, std::size_t l_a, std::size_t l_b) {
  require_even(l_b, "sigma_gegenbauer");
  if (!(nu > 0.0)) throw std::domain_error("sigma_gegenbauer: nu must be > 0");
  if (l_a >= 1) return 0.0;
  return ipow(0.5, l_b) / binomial(nu + l_b / 2.0, nu);
}

double sigma_affine_cesaro(double a, double b, double alpha, std::size_t l_a,
                           std::size_t l_b) {
  require_even(l_b, "sigma_affine_cesaro");
  if (!(alpha > 0.0))
    throw std::domain_error("sigma_affine_cesaro: alpha must be > 0");
  return ipow(a, l_a) * ipow(b, l_b) / binomial((alpha + l_b) / 2.0, alpha / 2.0);
}

double addition_formula_residual(double lambda, std::size_t n, double x) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("addition_formula_residual: lambda must be > 0");
  const CoefficientFamily family = ultraspherical_family(lambda, n + 1, n + 1);
  const NorlundMethod method = gegenbauer(lambda);
  const double lhs = 1.0 / gegenbauer_mass(lambda);
  const double one_minus_x2 = (1.0 - x) * (1.0 + x);
  double rhs = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::vector<double> p = eval_orthonormal(family, n - k, k, x);
    rhs += method.weight(n, k) * ipow(one_minus_x2, n - k) * p[k] * p[k];
  }
  return std::fabs(lhs - rhs);
}

double addition_formula_residual_legendre(std::size_t n, double x) {
  const CoefficientFamily family = ultraspherical_family(0.5, n + 1, n + 1);
  const double lhs = (2.0 * n + 1.0) / 2.0;
  const double one_minus_x2 = (1.0 - x) * (1.0 + x);
  const std::vector<double> p0 = eval_orthonormal(family, 0, n, x);
  double rhs = p0[n] * p0[n];
  for (std::size_t k = 1; k <= n; ++k) {
    const std::vector<double> p = eval_orthonormal(family, k, n - k, x);
    rhs += 2.0 * ipow(one_minus_x2, k) * p[n - k] * p[n - k];
  }
  return std::fabs(lhs - rhs);
}

double ks_distance(const RootSample& sample, const EquilibriumMeasure& measure) {
  if (sample.points.empty()) throw std::domain_error("ks_distance: empty sample");
  std::vector<std::pair<double, double>> pts = sample.points;
  std::sort(pts.begin(), pts.end());
  double dist = 0.0;
  double cum = 0.0;
  for (const auto& [x, w] : pts) {
    const double F = measure.cdf(x);
    dist = std::max(dist, std::fabs(cum - F));
    cum += w;
    dist = std::max(dist, std::fabs(cum - F));
  }
  return dist;
}

}  // namespace orthomean
