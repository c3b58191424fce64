#include "orthomean/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace orthomean {

TanhSinhRule tanh_sinh_rule(double lo, double hi, double step, double t_max) {
  if (!(hi > lo)) throw std::invalid_argument("tanh_sinh_rule: degenerate support");
  const double c = 0.5 * (lo + hi);
  const double r = 0.5 * (hi - lo);
  const double half_pi = 1.5707963267948966;

  TanhSinhRule rule;
  const long m = static_cast<long>(std::floor(t_max / step));
  rule.nodes.reserve(2 * m + 1);
  for (long i = -m; i <= m; ++i) {
    const double t = i * step;
    const double u = half_pi * std::sinh(t);
    const double s = std::tanh(u);
    // 1 -/+ s without cancellation: 1 - tanh(u) = 2 / (1 + e^{2u})
    const double one_minus_s = 2.0 / (1.0 + std::exp(2.0 * u));
    const double one_plus_s = 2.0 / (1.0 + std::exp(-2.0 * u));
    const double sech = 1.0 / std::cosh(u);
    const double w = step * half_pi * std::cosh(t) * sech * sech * r;
    if (w == 0.0) continue;
    rule.nodes.push_back(c + r * s);
    rule.dist_lo.push_back(r * one_plus_s);
    rule.dist_hi.push_back(r * one_minus_s);
    rule.weights.push_back(w);
  }
  return rule;
}

double integrate(const std::function<double(double)>& f, double lo, double hi) {
  const TanhSinhRule rule = tanh_sinh_rule(lo, hi);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (std::isfinite(v)) sum += rule.weights[i] * v;
  }
  return sum;
}

double integrate_weighted(const std::function<double(double)>& core, double lo,
                          double hi, double exp_lo, double exp_hi) {
  if (exp_lo <= -1.0 || exp_hi <= -1.0)
    throw std::domain_error("integrate_weighted: endpoint exponent <= -1 is not integrable");
  const TanhSinhRule rule = tanh_sinh_rule(lo, hi);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double w = rule.weights[i];
    if (exp_lo != 0.0) w *= std::pow(rule.dist_lo[i], exp_lo);
    if (exp_hi != 0.0) w *= std::pow(rule.dist_hi[i], exp_hi);
    sum += w * core(rule.nodes[i]);
  }
  return sum;
}

}  // namespace orthomean
