#pragma once

#include <cstddef>

// Gamma-function based helpers shared by the coefficient families, the
// summation methods and the equilibrium measures.  All arguments that reach
// lgamma here are strictly positive, so no reflection handling is needed.

namespace orthomean {

// log Gamma(x), x > 0
double log_gamma(double x);

// Generalized binomial coefficient C(x, y) = Gamma(x+1)/(Gamma(y+1)Gamma(x-y+1))
// for x >= y >= 0 (real arguments).
double binomial(double x, double y);

// Beta(a, b) for a, b > 0, evaluated through log-gamma.
double beta_function(double a, double b);

// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in [0,1].
// Continued-fraction evaluation with the symmetry switch at x > (a+1)/(a+b+2).
double reg_inc_beta(double a, double b, double x);

}  // namespace orthomean
