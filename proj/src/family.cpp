#include "orthomean/family.hpp"

#include <cmath>
#include <stdexcept>

#include "orthomean/csv.hpp"
#include "orthomean/quadrature.hpp"
#include "orthomean/special.hpp"

namespace orthomean {

void CoefficientTable::validate() const {
  if (a.empty() || a.size() != b.size())
    throw std::invalid_argument("coefficient table: a and b must be nonempty and equal length");
  for (std::size_t j = 1; j < b.size(); ++j) {
    if (!(b[j] > 0.0))
      throw std::invalid_argument("coefficient table: b_" + std::to_string(j) +
                                  " must be positive");
  }
}

CoefficientFamily::CoefficientFamily(std::string name, CoeffFn coeff, MassFn mass,
                                     double support_bound, std::size_t scan_j,
                                     std::size_t scan_k)
    : name_(std::move(name)),
      coeff_(std::move(coeff)),
      mass_(std::move(mass)),
      support_bound_(support_bound) {
  for (std::size_t k = 0; k <= scan_k; ++k) {
    for (std::size_t j = 0; j <= scan_j; ++j) {
      const RecurrencePair p = coeff_(k, j);
      if (j >= 1 && !(p.b > 0.0))
        throw std::invalid_argument(name_ + ": off-diagonal coefficient b_" +
                                    std::to_string(j) + "^(" + std::to_string(k) +
                                    ") is not positive");
      const double aa = std::fabs(p.a);
      if (aa > bound_a_) bound_a_ = aa;
      if (j >= 1 && p.b > bound_b_) bound_b_ = p.b;
    }
  }
}

RecurrencePair CoefficientFamily::coeff(std::size_t k, std::size_t j) const {
  return coeff_(k, j);
}

double CoefficientFamily::mass(std::size_t k) const {
  const double m = mass_(k);
  if (!(m > 0.0) || !std::isfinite(m))
    throw std::runtime_error(name_ + ": measure mass must be positive and finite");
  return m;
}

CoefficientFamily ultraspherical_family(double lambda, std::size_t scan_j,
                                        std::size_t scan_k) {
  if (!(lambda > -0.5))
    throw std::invalid_argument("ultraspherical_family: lambda must be > -1/2");
  auto coeff = [lambda](std::size_t k, std::size_t j) -> RecurrencePair {
    if (j == 0) return {0.0, 0.0};
    const double mu = static_cast<double>(k) + lambda;
    const double jj = static_cast<double>(j);
    if (mu == 0.0 && j == 1) return {0.0, 1.0 / std::sqrt(2.0)};  // Chebyshev limit
    const double ratio = jj * (jj + 2.0 * mu - 1.0) / ((jj + mu - 1.0) * (jj + mu));
    return {0.0, 0.5 * std::sqrt(ratio)};
  };
  auto mass = [lambda](std::size_t k) {
    const double mu = static_cast<double>(k) + lambda;
    // sqrt(pi) Gamma(mu + 1/2) / Gamma(mu + 1)
    return std::exp(0.5 * std::log(M_PI) + log_gamma(mu + 0.5) - log_gamma(mu + 1.0));
  };
  return CoefficientFamily("ultraspherical", coeff, mass, 1.0, scan_j, scan_k);
}

CoefficientFamily jacobi_shift_family(double lambda1, double lambda2,
                                      std::size_t scan_j, std::size_t scan_k) {
  if (!(lambda1 > -1.0) || !(lambda2 > -1.0))
    throw std::invalid_argument("jacobi_shift_family: lambda1, lambda2 must be > -1");
  auto coeff = [lambda1, lambda2](std::size_t k, std::size_t j) -> RecurrencePair {
    const double al = lambda1 + static_cast<double>(k);
    const double be = lambda2 + static_cast<double>(k);
    const double s = al + be;
    if (j == 0) return {(be - al) / (s + 2.0), 0.0};
    const double n = static_cast<double>(j);
    const double a = (be - al) * (be + al) / ((2.0 * n + s) * (2.0 * n + s + 2.0));
    double b2;
    if (j == 1) {
      b2 = 4.0 * (al + 1.0) * (be + 1.0) / ((s + 2.0) * (s + 2.0) * (s + 3.0));
    } else {
      b2 = 4.0 * n * (n + al) * (n + be) * (n + s) /
           ((2.0 * n + s) * (2.0 * n + s) * (2.0 * n + s + 1.0) * (2.0 * n + s - 1.0));
    }
    return {a, std::sqrt(b2)};
  };
  auto mass = [lambda1, lambda2](std::size_t k) {
    const double al = lambda1 + static_cast<double>(k);
    const double be = lambda2 + static_cast<double>(k);
    return std::exp((al + be + 1.0) * std::log(2.0) + log_gamma(al + 1.0) +
                    log_gamma(be + 1.0) - log_gamma(al + be + 2.0));
  };
  return CoefficientFamily("jacobi_shift", coeff, mass, 1.0, scan_j, scan_k);
}

CoefficientFamily constant_family(CoefficientTable table, const std::string& name) {
  table.validate();
  if (!(table.mass > 0.0))
    throw std::invalid_argument("constant_family: mass must be positive");
  const std::size_t max_index = table.max_index();
  const double table_mass = table.mass;
  auto coeff = [t = std::move(table)](std::size_t, std::size_t j) -> RecurrencePair {
    if (j >= t.a.size())
      throw std::out_of_range("constant_family: coefficient index beyond table");
    return {t.a[j], t.b[j]};
  };
  // scan_k = 0: coefficients are k-independent
  auto mass_fn = [table_mass](std::size_t) { return table_mass; };
  return CoefficientFamily(name, coeff, mass_fn, 0.0, max_index, 0);
}

CoefficientTable legendre_table(std::size_t max_index) {
  CoefficientTable t;
  t.a.assign(max_index + 1, 0.0);
  t.b.assign(max_index + 1, 0.0);
  for (std::size_t j = 1; j <= max_index; ++j) {
    const double jj = static_cast<double>(j);
    t.b[j] = jj / std::sqrt(4.0 * jj * jj - 1.0);
  }
  t.mass = 2.0;
  return t;
}

CoefficientTable stieltjes_coefficients(const std::function<double(double)>& core,
                                        double lo, double hi, std::size_t count,
                                        double exp_lo, double exp_hi) {
  if (count < 1) throw std::invalid_argument("stieltjes_coefficients: count must be >= 1");
  if (!(hi > lo)) throw std::invalid_argument("stieltjes_coefficients: degenerate support");
  if (exp_lo <= -1.0 || exp_hi <= -1.0)
    throw std::invalid_argument("stieltjes_coefficients: endpoint exponent <= -1");

  const TanhSinhRule rule = tanh_sinh_rule(lo, hi);
  const std::size_t m = rule.nodes.size();
  std::vector<double> w(m);
  double mass = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double wi = rule.weights[i] * core(rule.nodes[i]);
    if (exp_lo != 0.0) wi *= std::pow(rule.dist_lo[i], exp_lo);
    if (exp_hi != 0.0) wi *= std::pow(rule.dist_hi[i], exp_hi);
    if (!std::isfinite(wi) || wi < 0.0)
      throw std::runtime_error("stieltjes_coefficients: weight not finite/nonnegative at node");
    w[i] = wi;
    mass += wi;
  }
  if (!(mass > 0.0)) throw std::runtime_error("stieltjes_coefficients: zero total mass");

  CoefficientTable t;
  t.a.assign(count, 0.0);
  t.b.assign(count, 0.0);
  t.mass = mass;

  // Orthonormal Stieltjes recurrence on the discrete measure.
  std::vector<double> p_prev(m, 0.0), p_cur(m, 1.0 / std::sqrt(mass)), tmp(m);
  for (std::size_t j = 0; j < count; ++j) {
    double aj = 0.0;
    for (std::size_t i = 0; i < m; ++i) aj += w[i] * rule.nodes[i] * p_cur[i] * p_cur[i];
    t.a[j] = aj;
    if (j + 1 == count) break;
    const double bj = (j == 0) ? 0.0 : t.b[j];
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      tmp[i] = (rule.nodes[i] - aj) * p_cur[i] - bj * p_prev[i];
      norm2 += w[i] * tmp[i] * tmp[i];
    }
    if (!(norm2 > 0.0))
      throw std::runtime_error("stieltjes_coefficients: recurrence broke down at index " +
                               std::to_string(j + 1));
    const double bnext = std::sqrt(norm2);
    t.b[j + 1] = bnext;
    for (std::size_t i = 0; i < m; ++i) {
      p_prev[i] = p_cur[i];
      p_cur[i] = tmp[i] / bnext;
    }
  }
  return t;
}

NevaiDeviationReport uniform_nevai_report(const CoefficientFamily& family, double a,
                                          double b, std::size_t n_max,
                                          std::size_t k_max, std::size_t onset) {
  if (n_max < 1 || k_max < 1)
    throw std::invalid_argument("uniform_nevai_report: n_max and k_max must be >= 1");
  NevaiDeviationReport rep;
  rep.onset = onset;
  rep.rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    double da = 0.0, db = 0.0;
    for (std::size_t k = 0; k <= k_max; ++k) {
      const RecurrencePair p = family.coeff(k, n);
      da = std::max(da, std::fabs(p.a - a));
      db = std::max(db, std::fabs(p.b - b));
    }
    rep.rows.push_back({n, da, db});
  }
  rep.monotone_after_onset = true;
  for (std::size_t i = onset; i + 1 < rep.rows.size(); ++i) {
    if (rep.rows[i + 1].sup_a_dev > rep.rows[i].sup_a_dev * (1.0 + 1e-12) ||
        rep.rows[i + 1].sup_b_dev > rep.rows[i].sup_b_dev * (1.0 + 1e-12)) {
      rep.monotone_after_onset = false;
      break;
    }
  }
  return rep;
}

void write_table_csv(const CoefficientTable& table, const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t j = 0; j < table.a.size(); ++j) {
    rows.push_back({std::to_string(j), format_double(table.a[j]), format_double(table.b[j])});
  }
  write_csv(path, "j,a,b", rows);
}

CoefficientTable read_table_csv(const std::string& path, double mass) {
  CoefficientTable t;
  t.mass = mass;
  for (const auto& row : read_csv(path)) {
    if (row.size() != 3)
      throw std::runtime_error("coefficient table " + path + ": expected 3 columns");
    const std::size_t j = std::stoul(row[0]);
    if (j != t.a.size())
      throw std::runtime_error("coefficient table " + path + ": indices must be consecutive");
    t.a.push_back(std::stod(row[1]));
    t.b.push_back(std::stod(row[2]));
  }
  t.validate();
  return t;
}

}  // namespace orthomean
