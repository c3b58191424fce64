#pragma once

#include <functional>
#include <vector>

namespace orthomean {

// Tanh-sinh (double exponential) rule on (lo, hi).  Besides the node
// positions, the distances to both interval endpoints are kept at full
// relative precision; weight functions with algebraic endpoint factors
// (x-lo)^g (hi-x)^g must be evaluated through them, since forming hi-x
// from the rounded node loses the factor entirely near the boundary.
struct TanhSinhRule {
  std::vector<double> nodes;
  std::vector<double> dist_lo;  // x - lo, exact to relative precision
  std::vector<double> dist_hi;  // hi - x
  std::vector<double> weights;
};

TanhSinhRule tanh_sinh_rule(double lo, double hi, double step = 1.0 / 64.0,
                            double t_max = 3.75);

// Integral of a bounded (or mildly singular) f over (lo, hi).
double integrate(const std::function<double(double)>& f, double lo, double hi);

// Integral of core(x) * (x-lo)^{exp_lo} * (hi-x)^{exp_hi} with smooth core
// and exponents > -1.  Endpoint factors are evaluated from the exact
// distances, so exponents close to -1 stay accurate.
double integrate_weighted(const std::function<double(double)>& core, double lo,
                          double hi, double exp_lo, double exp_hi);

}  // namespace orthomean
