#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "orthomean/family.hpp"
#include "orthomean/summation.hpp"
#include "orthomean/tridiag.hpp"

namespace orthomean {

// Default cap on the moment order for the path-enumeration oracle (3^l cost).
inline constexpr std::size_t kDefaultMomentCap = 12;

enum class MeanKind { mu_bar, lambda, nu };

struct MeanMoments {
  std::size_t n = 0;
  MeanKind kind = MeanKind::mu_bar;
  std::vector<double> moments;  // m_0 .. m_L
};

// Weighted point masses behind nu_{n+1}.
struct RootSample {
  std::vector<std::pair<double, double>> points;  // (root, weight > 0)
};

// Moments of the mean measure mu_bar_n = sum_k sigma_{n,k} (p_k^{(n-k)})^2 dmu^{(n-k)}.
MeanMoments mu_bar_moments(const CoefficientFamily& family,
                           const SummationMethod& method, std::size_t n,
                           std::size_t L, bool parallel = true);

// Moment int x^l (p_m^{(k)})^2 dmu^{(k)} by explicit enumeration of the 3^l
// step sequences; independent oracle for local_moments.  l <= 12.
double path_enumeration_moment(const CoefficientFamily& family, std::size_t k,
                               std::size_t m, std::size_t l);

// Number of closed integer paths of length l with l_b moving steps:
// C(l, l_b) * C(l_b, l_b/2) for even l_b.
double path_signature_count(std::size_t l, std::size_t l_b);

// Same count by brute-force enumeration of step sequences (test oracle).
std::size_t path_signature_count_enumerated(std::size_t l, std::size_t l_b);

// Moments of lambda_n = (1/N_n) sum_k sigma_{n,k} K_k^{(n-k)}(x,x) dmu^{(n-k)}.
// Computed by the direct sum and cross-checked against the Riesz decomposition
// sum_k tau_{n,k} mu_bar_k; disagreement beyond 1e-10 relative throws.
MeanMoments lambda_moments(const CoefficientFamily& family, const NorlundMethod& method,
                           std::size_t n, std::size_t L, bool parallel = true);

// Weighted roots behind nu_{n+1}: eigenvalues of J_k^{(n-k)} (size k+1) with
// weight sigma_{n,k}/N_n each, assembled in k-order.
RootSample root_sample(const CoefficientFamily& family, const NorlundMethod& method,
                       std::size_t n, bool parallel = true);

// Power-sum moments of a root sample.
std::vector<double> sample_moments(const RootSample& sample, std::size_t L);

// Finite-n partial sum sum_k sigma_{n,k} (a_k^{(n-k)})^{l_a} (b_k^{(n-k)})^{l_b}.
double sigma_partial(const CoefficientFamily& family, const SummationMethod& method,
                     std::size_t n, std::size_t l_a, std::size_t l_b);

// Weighted coefficient-shift defects (a and b) at index n for shift l >= 1.
std::pair<double, double> nevai_shift_defect(const CoefficientFamily& family,
                                             const SummationMethod& method,
                                             std::size_t n, std::size_t shift);

// Moment gap between int x^l K_k^{(n-k)}(x,x) dmu^{(n-k)} and the power sum
// of the roots of p_{k+1}^{(n-k)}, with the 2 l (A+2B)^l bound.
struct SimonGap {
  double gap;
  double bound;
};
SimonGap simon_gap(const CoefficientFamily& family, std::size_t n, std::size_t k,
                   std::size_t l);

// Equilibrium moment from a Sigma table: sum over even l_b <= l of
// path_signature_count(l, l_b) * sigma(l - l_b, l_b).
double equilibrium_moment_from_sigma(
    const std::function<double(std::size_t l_a, std::size_t l_b)>& sigma,
    std::size_t l);

}  // namespace orthomean
