#include "orthomean/mean_limits.hpp"

#include <cmath>
#include <stdexcept>

#include "orthomean/special.hpp"

namespace orthomean {

namespace {

double ipow(double x, std::size_t e) {
  double r = 1.0;
  for (std::size_t i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

MeanMoments mu_bar_moments(const CoefficientFamily& family,
                           const SummationMethod& method, std::size_t n,
                           std::size_t L, bool parallel) {
  std::vector<std::vector<double>> per_k(n + 1);
  std::vector<double> w(n + 1);
  for (std::size_t k = 0; k <= n; ++k) w[k] = method.weight(n, k);

  const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k <= nn; ++k) {
    if (w[k] != 0.0)
      per_k[k] = local_moments(family, n - static_cast<std::size_t>(k),
                               static_cast<std::size_t>(k), L);
  }

  MeanMoments out;
  out.n = n;
  out.kind = MeanKind::mu_bar;
  out.moments.assign(L + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    if (w[k] == 0.0) continue;
    for (std::size_t l = 0; l <= L; ++l) out.moments[l] += w[k] * per_k[k][l];
  }
  return out;
}

double path_enumeration_moment(const CoefficientFamily& family, std::size_t k,
                               std::size_t m, std::size_t l) {
  if (l > kDefaultMomentCap)
    throw std::invalid_argument("path_enumeration_moment: order beyond enumeration cap");

  // DFS over step sequences; pos is the shifted height m + rho_j.
  // Coefficient conventions: a and b vanish for negative indices, b_0 = 0.
  double total = 0.0;
  const long target = static_cast<long>(m);
  std::function<void(std::size_t, long, double)> visit =
      [&](std::size_t step, long pos, double weight) {
        if (weight == 0.0) return;
        const std::size_t remaining = l - step;
        const long dist = std::labs(pos - target);
        if (dist > static_cast<long>(remaining)) return;
        if (step == l) {
          total += weight;
          return;
        }
        // flat: a_pos
        if (pos >= 0) {
          const double a = family.coeff(k, static_cast<std::size_t>(pos)).a;
          visit(step + 1, pos, weight * a);
        }
        // up: b_{pos+1}
        if (pos + 1 >= 1) {
          const double b = family.coeff(k, static_cast<std::size_t>(pos + 1)).b;
          visit(step + 1, pos + 1, weight * b);
        }
        // down: b_pos (b_0 = 0 blocks the descent below zero)
        if (pos >= 1) {
          const double b = family.coeff(k, static_cast<std::size_t>(pos)).b;
          visit(step + 1, pos - 1, weight * b);
        }
      };
  visit(0, target, 1.0);
  return total;
}

double path_signature_count(std::size_t l, std::size_t l_b) {
  if (l_b > l || (l_b % 2) != 0) return 0.0;
  return binomial(static_cast<double>(l), static_cast<double>(l_b)) *
         binomial(static_cast<double>(l_b), static_cast<double>(l_b / 2));
}

std::size_t path_signature_count_enumerated(std::size_t l, std::size_t l_b) {
  std::size_t count = 0;
  std::function<void(std::size_t, long, std::size_t)> visit =
      [&](std::size_t step, long pos, std::size_t moving) {
        if (std::labs(pos) > static_cast<long>(l - step)) return;
        if (step == l) {
          if (pos == 0 && moving == l_b) ++count;
          return;
        }
        visit(step + 1, pos, moving);
        visit(step + 1, pos + 1, moving + 1);
        visit(step + 1, pos - 1, moving + 1);
      };
  visit(0, 0, 0);
  return count;
}

MeanMoments lambda_moments(const CoefficientFamily& family, const NorlundMethod& method,
                           std::size_t n, std::size_t L, bool parallel) {
  method.reserve(n);
  const double N_n = method.normalizer(n);

  // route (a): direct CD-kernel sum
  std::vector<std::vector<double>> per_k(n + 1);
  const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k <= nn; ++k) {
    std::vector<double> acc(L + 1, 0.0);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(k); ++j) {
      const std::vector<double> lm =
          local_moments(family, n - static_cast<std::size_t>(k), j, L);
      for (std::size_t l = 0; l <= L; ++l) acc[l] += lm[l];
    }
    per_k[k] = std::move(acc);
  }
  std::vector<double> direct(L + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    const double w = method.weight(n, k);
    for (std::size_t l = 0; l <= L; ++l) direct[l] += w * per_k[k][l] / N_n;
  }

  // route (b): Riesz decomposition over the mu_bar means
  std::vector<std::vector<double>> mu_bars(n + 1);
  const SummationMethod base = method.as_summation();
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k <= nn; ++k) {
    mu_bars[k] =
        mu_bar_moments(family, base, static_cast<std::size_t>(k), L, false).moments;
  }
  std::vector<double> riesz(L + 1, 0.0);
  const double tau_n = method.tau(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const double w = tau_n / (N_n * method.tau(k));
    for (std::size_t l = 0; l <= L; ++l) riesz[l] += w * mu_bars[k][l];
  }

  for (std::size_t l = 0; l <= L; ++l) {
    const double scale = std::max(1.0, std::fabs(direct[l]));
    if (std::fabs(direct[l] - riesz[l]) > 1e-10 * scale)
      throw std::runtime_error(
          "lambda_moments: direct and Riesz routes disagree at moment order " +
          std::to_string(l));
  }

  MeanMoments out;
  out.n = n;
  out.kind = MeanKind::lambda;
  out.moments = std::move(direct);
  return out;
}

RootSample root_sample(const CoefficientFamily& family, const NorlundMethod& method,
                       std::size_t n, bool parallel) {
  method.reserve(n);
  const double N_n = method.normalizer(n);
  std::vector<std::vector<double>> roots(n + 1);
  std::vector<double> w(n + 1);
  for (std::size_t k = 0; k <= n; ++k) w[k] = method.weight(n, k) / N_n;

  const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k <= nn; ++k) {
    if (w[k] != 0.0) {
      const JacobiMatrix J = jacobi_matrix(family, n - static_cast<std::size_t>(k),
                                           static_cast<std::size_t>(k) + 1);
      roots[k] = eigen_roots(J);
    }
  }

  RootSample sample;
  for (std::size_t k = 0; k <= n; ++k) {
    for (double r : roots[k]) sample.points.emplace_back(r, w[k]);
  }
  return sample;
}

std::vector<double> sample_moments(const RootSample& sample, std::size_t L) {
  std::vector<double> m(L + 1, 0.0);
  for (const auto& [x, w] : sample.points) {
    double p = 1.0;
    for (std::size_t l = 0; l <= L; ++l) {
      m[l] += w * p;
      p *= x;
    }
  }
  return m;
}

double sigma_partial(const CoefficientFamily& family, const SummationMethod& method,
                     std::size_t n, std::size_t l_a, std::size_t l_b) {
  double sum = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double w = method.weight(n, k);
    if (w == 0.0) continue;
    const RecurrencePair p = family.coeff(n - k, k);
    sum += w * ipow(p.a, l_a) * ipow(p.b, l_b);
  }
  return sum;
}

std::pair<double, double> nevai_shift_defect(const CoefficientFamily& family,
                                             const SummationMethod& method,
                                             std::size_t n, std::size_t shift) {
  if (shift < 1) throw std::invalid_argument("nevai_shift_defect: shift must be >= 1");
  double da = 0.0, db = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double w = method.weight(n, k);
    if (w == 0.0) continue;
    const RecurrencePair p = family.coeff(n - k, k);
    const RecurrencePair q = family.coeff(n - k, k + shift);
    da += w * std::fabs(q.a - p.a);
    db += w * std::fabs(q.b - p.b);
  }
  return {da, db};
}

SimonGap simon_gap(const CoefficientFamily& family, std::size_t n, std::size_t k,
                   std::size_t l) {
  if (k > n) throw std::invalid_argument("simon_gap: need k <= n");
  const std::size_t measure = n - k;
  double kernel_moment = 0.0;
  for (std::size_t j = 0; j <= k; ++j)
    kernel_moment += local_moments(family, measure, j, l)[l];
  const JacobiMatrix J = jacobi_matrix(family, measure, k + 1);
  const double root_power_sum = trace_power(J, l);
  const auto [A, B] = family.coeff_bounds();
  return {std::fabs(kernel_moment - root_power_sum),
          2.0 * l * ipow(A + 2.0 * B, l)};
}

double equilibrium_moment_from_sigma(
    const std::function<double(std::size_t l_a, std::size_t l_b)>& sigma,
    std::size_t l) {
  double sum = 0.0;
  for (std::size_t l_b = 0; l_b <= l; l_b += 2)
    sum += path_signature_count(l, l_b) * sigma(l - l_b, l_b);
  return sum;
}

}  // namespace orthomean
