#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace orthomean {

// One entry of the three-term recurrence: diagonal coefficient a_j and
// off-diagonal coefficient b_j (the latter defined for j >= 1).
struct RecurrencePair {
  double a = 0.0;
  double b = 0.0;
};

// Plain coefficient table (a_j, b_j) for j = 0..max_index().  b[0] is unused.
struct CoefficientTable {
  std::vector<double> a;
  std::vector<double> b;
  double mass = 0.0;

  std::size_t max_index() const { return a.empty() ? 0 : a.size() - 1; }
  void validate() const;  // throws std::invalid_argument on b_j <= 0, j >= 1
};

// Doubly-indexed family of orthogonality measures, described by the
// recurrence coefficients a_j^{(k)}, b_j^{(k)} and the total mass of each
// measure.  Immutable after construction; all accessors are pure.
class CoefficientFamily {
 public:
  using CoeffFn = std::function<RecurrencePair(std::size_t k, std::size_t j)>;
  using MassFn = std::function<double(std::size_t k)>;

  CoefficientFamily(std::string name, CoeffFn coeff, MassFn mass,
                    double support_bound, std::size_t scan_j = 400,
                    std::size_t scan_k = 400);

  RecurrencePair coeff(std::size_t k, std::size_t j) const;
  double mass(std::size_t k) const;
  double support_bound() const { return support_bound_; }

  // Scanned suprema (A, B) of |a_j^{(k)}| and b_j^{(k)} over the rectangle
  // j <= scan_j, k <= scan_k given at construction.
  std::pair<double, double> coeff_bounds() const { return {bound_a_, bound_b_}; }

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  CoeffFn coeff_;
  MassFn mass_;
  double support_bound_;
  double bound_a_ = 0.0;
  double bound_b_ = 0.0;
};

// Ultraspherical family: measure index k carries weight (1-x^2)^{k+lambda-1/2}
// on [-1,1].  Requires lambda > -1/2.
CoefficientFamily ultraspherical_family(double lambda, std::size_t scan_j = 400,
                                        std::size_t scan_k = 400);

// Shifted Jacobi family: measure index k carries weight
// (1-x)^{lambda1+k} (1+x)^{lambda2+k} on [-1,1].  Requires lambda1, lambda2 > -1.
CoefficientFamily jacobi_shift_family(double lambda1, double lambda2,
                                      std::size_t scan_j = 400,
                                      std::size_t scan_k = 400);

// Single measure replicated across all k.
CoefficientFamily constant_family(CoefficientTable table, const std::string& name = "constant");

// Legendre coefficients a_j = 0, b_j = j / sqrt(4 j^2 - 1) up to max_index.
CoefficientTable legendre_table(std::size_t max_index);

// Discretized Stieltjes procedure: recurrence coefficients of the measure
// core(x) * (x-lo)^{exp_lo} * (hi-x)^{exp_hi} dx on (lo, hi).  Independent
// oracle for the closed-form families; the endpoint exponents keep singular
// Jacobi-type weights accurate.
CoefficientTable stieltjes_coefficients(const std::function<double(double)>& core,
                                        double lo, double hi, std::size_t count,
                                        double exp_lo = 0.0, double exp_hi = 0.0);

// Per-n deviation of the family from the Nevai limits (a, b), uniform in k.
struct NevaiDeviationReport {
  struct Row {
    std::size_t n;
    double sup_a_dev;
    double sup_b_dev;
  };
  std::vector<Row> rows;
  bool monotone_after_onset = false;
  std::size_t onset = 0;
};

NevaiDeviationReport uniform_nevai_report(const CoefficientFamily& family, double a,
                                          double b, std::size_t n_max,
                                          std::size_t k_max, std::size_t onset = 10);

// CSV round trip for coefficient tables (header "j,a,b").
void write_table_csv(const CoefficientTable& table, const std::string& path);
CoefficientTable read_table_csv(const std::string& path, double mass);

}  // namespace orthomean
