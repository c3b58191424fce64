#include "orthomean/summation.hpp"

#include <cmath>
#include <stdexcept>

#include "orthomean/special.hpp"

namespace orthomean {

struct NorlundMethod::Impl {
  std::string name;
  std::function<double(std::size_t)> raw;
  double sigma0 = 1.0;
  mutable std::vector<double> sigma;    // normalized, sigma[0] = 1
  mutable std::vector<double> prefix;   // prefix[n] = sum_{j<=n} sigma_j = 1/tau_n
  mutable std::vector<double> inv_tau;  // inv_tau[n] = sum_{k<=n} prefix[k]

  void ensure(std::size_t n) const {
    if (n < sigma.size()) return;
    const std::size_t old = sigma.size();
    sigma.resize(n + 1);
    prefix.resize(n + 1);
    inv_tau.resize(n + 1);
    for (std::size_t i = old; i <= n; ++i) {
      // Negative entries are tolerated here so that regularity_check can
      // report them as a structured (n,k) failure instead of aborting.
      const double s = raw(i) / sigma0;
      if (!std::isfinite(s))
        throw std::invalid_argument(name + ": sigma_" + std::to_string(i) +
                                    " must be finite");
      sigma[i] = s;
      prefix[i] = (i == 0 ? 0.0 : prefix[i - 1]) + s;
      if (!(prefix[i] > 0.0))
        throw std::runtime_error(name + ": nonpositive partial sum at index " +
                                 std::to_string(i));
      inv_tau[i] = (i == 0 ? 0.0 : inv_tau[i - 1]) + prefix[i];
    }
  }
};

NorlundMethod::NorlundMethod(std::string name,
                             std::function<double(std::size_t)> sigma_seq)
    : impl_(std::make_shared<Impl>()) {
  impl_->name = std::move(name);
  impl_->raw = std::move(sigma_seq);
  const double s0 = impl_->raw(0);
  if (!(s0 > 0.0))
    throw std::invalid_argument(impl_->name + ": sigma_0 must be positive");
  impl_->sigma0 = s0;
  impl_->ensure(0);
}

const std::string& NorlundMethod::name() const { return impl_->name; }

double NorlundMethod::sigma(std::size_t k) const {
  impl_->ensure(k);
  return impl_->sigma[k];
}

double NorlundMethod::tau(std::size_t n) const {
  impl_->ensure(n);
  return 1.0 / impl_->prefix[n];
}

double NorlundMethod::normalizer(std::size_t n) const {
  impl_->ensure(n);
  return impl_->inv_tau[n] / impl_->prefix[n];
}

double NorlundMethod::weight(std::size_t n, std::size_t k) const {
  if (k > n) throw std::invalid_argument("NorlundMethod::weight: k > n");
  impl_->ensure(n);
  return impl_->sigma[n - k] / impl_->prefix[n];
}

void NorlundMethod::reserve(std::size_t n_max) const { impl_->ensure(n_max); }

SummationMethod NorlundMethod::as_summation() const {
  NorlundMethod self = *this;
  return {impl_->name,
          [self](std::size_t n, std::size_t k) { return self.weight(n, k); }};
}

NorlundMethod identity_method() {
  return NorlundMethod("identity",
                       [](std::size_t k) { return k == 0 ? 1.0 : 0.0; });
}

NorlundMethod arithmetic_mean() {
  return NorlundMethod("arithmetic", [](std::size_t) { return 1.0; });
}

NorlundMethod legendre_summation() {
  return NorlundMethod("legendre",
                       [](std::size_t k) { return k == 0 ? 1.0 : 2.0; });
}

NorlundMethod cesaro(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("cesaro: alpha must be > 0");
  auto sigma = [alpha](std::size_t k) {
    // C(k + alpha - 1, k)
    return std::exp(log_gamma(k + alpha) - log_gamma(alpha) - log_gamma(k + 1.0));
  };
  return NorlundMethod("cesaro(" + std::to_string(alpha) + ")", sigma);
}

NorlundMethod gegenbauer(double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("gegenbauer: nu must be > 0");
  if (nu == 0.5) {
    // limit case: identical to the Legendre summation
    return NorlundMethod("gegenbauer(0.5)",
                         [](std::size_t k) { return k == 0 ? 1.0 : 2.0; });
  }
  auto sigma = [nu](std::size_t k) { return gegenbauer_sigma(nu, k); };
  return NorlundMethod("gegenbauer(" + std::to_string(nu) + ")", sigma);
}

double cesaro_tau(double alpha, std::size_t n) {
  // 1 / C(n + alpha, n) as a running product; the log-gamma route loses a few
  // ulps too many at n of a few hundred.
  if (n > 4096)
    return std::exp(log_gamma(n + 1.0) + log_gamma(alpha + 1.0) -
                    log_gamma(n + alpha + 1.0));
  double r = 1.0;
  for (std::size_t i = 1; i <= n; ++i) r *= i / (alpha + i);
  return r;
}

double cesaro_normalizer(double alpha, std::size_t n) {
  return (n + alpha + 1.0) / (alpha + 1.0);
}

double legendre_tau(std::size_t n) { return 1.0 / (2.0 * n + 1.0); }

double legendre_normalizer(std::size_t n) {
  return (n + 1.0) * (n + 1.0) / (2.0 * n + 1.0);
}

double gegenbauer_sigma(double nu, std::size_t k) {
  // (2k + 2nu - 1) Gamma(k + 2nu - 1) / (Gamma(2nu) Gamma(k+1)); the k = 0
  // value reduces to 1 for every nu.
  if (k == 0) return 1.0;
  return (2.0 * k + 2.0 * nu - 1.0) *
         std::exp(log_gamma(k + 2.0 * nu - 1.0) - log_gamma(2.0 * nu) -
                  log_gamma(k + 1.0));
}

double gegenbauer_tau(double nu, std::size_t n) {
  return std::exp(log_gamma(2.0 * nu + 1.0) + log_gamma(n + 1.0) -
                  log_gamma(n + 2.0 * nu)) /
         (2.0 * n + 2.0 * nu);
}

double gegenbauer_normalizer(double nu, std::size_t n) {
  return (2.0 * n + 2.0 * nu + 1.0) * (n + 2.0 * nu) /
         ((2.0 * n + 2.0 * nu) * (2.0 * nu + 1.0));
}

SummationMethod riesz_derived(const NorlundMethod& m) {
  NorlundMethod src = m;
  return {"riesz(" + m.name() + ")", [src](std::size_t n, std::size_t k) {
            return src.tau(n) / (src.normalizer(n) * src.tau(k));
          }};
}

RegularityReport regularity_check(const SummationMethod& method, std::size_t n_max,
                                  std::size_t col_onset) {
  if (n_max < col_onset || col_onset < 1)
    throw std::invalid_argument("regularity_check: need n_max >= col_onset >= 1");
  RegularityReport rep;
  for (std::size_t n = 0; n <= n_max; ++n) {
    double row = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      const double w = method.weight(n, k);
      if (w < 0.0) {
        rep.nonneg_ok = false;
        rep.fail_n = n;
        rep.fail_k = k;
        return rep;
      }
      row += w;
    }
    if (std::fabs(row - 1.0) > 1e-12) {
      rep.rowsum_ok = false;
      rep.fail_n = n;
      rep.fail_k = n;
      return rep;
    }
  }
  const std::size_t half = n_max / 2;
  for (std::size_t k = 0; k <= col_onset; ++k) {
    const double w_full = method.weight(n_max, k);
    const double w_half = (k <= half) ? method.weight(half, k) : 0.0;
    rep.max_column_weight = std::max(rep.max_column_weight, w_full);
    if (w_half > 0.0)
      rep.decay_ratio = std::max(rep.decay_ratio, w_full / w_half);
  }
  return rep;
}

}  // namespace orthomean
