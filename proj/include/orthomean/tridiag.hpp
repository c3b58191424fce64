#pragma once

#include <cstddef>
#include <vector>

#include "orthomean/family.hpp"

namespace orthomean {

// Symmetric tridiagonal Jacobi matrix: diag = (a_0..a_l), offdiag = (b_1..b_l).
struct JacobiMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }
};

JacobiMatrix jacobi_matrix(const CoefficientFamily& family, std::size_t k,
                           std::size_t size);

// All eigenvalues, sorted ascending.  Implicit-shift QL with Wilkinson shifts;
// throws std::runtime_error (with the failing index) on non-convergence.
std::vector<double> eigen_roots(const JacobiMatrix& J);

struct QuadratureRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // positive, sum to mass(k)
};

// Golub-Welsch rule with m nodes for the measure mu^{(k)}; exact for
// polynomials of degree <= 2m-1.
QuadratureRule gauss_rule(const CoefficientFamily& family, std::size_t k,
                          std::size_t m);

// Orthonormal polynomial values p_0^{(k)}(x), ..., p_n^{(k)}(x) by forward
// recurrence, with p_0 = mass(k)^{-1/2}.
std::vector<double> eval_orthonormal(const CoefficientFamily& family, std::size_t k,
                                     std::size_t n, double x);

// CD kernel diagonal K_n^{(k)}(x, x) = sum_{l<=n} p_l^{(k)}(x)^2.
double cd_kernel_diag(const CoefficientFamily& family, std::size_t k, std::size_t n,
                      double x);

// Local moments int x^l (p_m^{(k)})^2 dmu^{(k)} for l = 0..L, computed as the
// (m,m) entries of Jacobi-matrix powers applied to the m-th basis column.
std::vector<double> local_moments(const CoefficientFamily& family, std::size_t k,
                                  std::size_t m, std::size_t L);

// Single moment, order l.
double local_moment(const CoefficientFamily& family, std::size_t k, std::size_t m,
                    std::size_t l);

// trace(J^l) = power sum of the eigenvalues, without an eigensolve.
double trace_power(const JacobiMatrix& J, std::size_t l);

}  // namespace orthomean
