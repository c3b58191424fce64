#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace orthomean {

// Triangular summation scheme sigma_{n,k}, 0 <= k <= n.
struct SummationMethod {
  std::string name;
  std::function<double(std::size_t n, std::size_t k)> weight;
};

// Norlund method sigma_{n,k} = tau_n sigma_{n-k}, normalized so that
// sigma_0 = 1 and tau_0 = 1.  Prefix sums for tau and the normalizer N_n are
// memoized; call reserve(n_max) up front if the method is shared across
// threads, after which all queries are read-only.
class NorlundMethod {
 public:
  NorlundMethod(std::string name, std::function<double(std::size_t)> sigma_seq);

  const std::string& name() const;
  double sigma(std::size_t k) const;       // normalized sigma_k
  double tau(std::size_t n) const;         // (sum_{j<=n} sigma_j)^{-1}
  double normalizer(std::size_t n) const;  // N_n = tau_n sum_{k<=n} 1/tau_k
  double weight(std::size_t n, std::size_t k) const;  // tau_n * sigma_{n-k}

  void reserve(std::size_t n_max) const;
  SummationMethod as_summation() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// sigma_{n,k} = delta_{n,k}; as a Norlund method tau_n = 1, N_n = n + 1.
NorlundMethod identity_method();

// Arithmetic mean sigma_{n,k} = 1/(n+1)  (Cesaro alpha = 1).
NorlundMethod arithmetic_mean();

// Legendre summation: sigma = (1, 2, 2, ...), tau_n = 1/(2n+1).
NorlundMethod legendre_summation();

// Cesaro (C, alpha) summation, alpha > 0.
NorlundMethod cesaro(double alpha);

// Gegenbauer (G, nu) summation, nu > 0; nu = 1/2 is the Legendre limit.
NorlundMethod gegenbauer(double nu);

// Closed forms from the printed tables, for cross-checks against the
// prefix-sum recomputation.
double cesaro_tau(double alpha, std::size_t n);
double cesaro_normalizer(double alpha, std::size_t n);
double legendre_tau(std::size_t n);
double legendre_normalizer(std::size_t n);
double gegenbauer_sigma(double nu, std::size_t k);
double gegenbauer_tau(double nu, std::size_t n);
double gegenbauer_normalizer(double nu, std::size_t n);

// Riesz method derived from a Norlund method: tau_{n,k} = (tau_n/N_n)/tau_k.
SummationMethod riesz_derived(const NorlundMethod& m);

// Finite verification of the Silverman-Toeplitz conditions: (i) and (ii) are
// asserted up to n_max; (iii) is reported as a decay trend for columns up to
// col_onset (necessary, not sufficient).
struct RegularityReport {
  bool nonneg_ok = true;
  bool rowsum_ok = true;
  std::size_t fail_n = 0;
  std::size_t fail_k = 0;
  double max_column_weight = 0.0;  // max_{k <= col_onset} sigma_{n_max, k}
  double decay_ratio = 0.0;        // vs the same column at n_max/2
  bool passed() const { return nonneg_ok && rowsum_ok; }
};

RegularityReport regularity_check(const SummationMethod& method, std::size_t n_max,
                                  std::size_t col_onset);

}  // namespace orthomean
