// Times the serial vs the parallel evaluation of the heavy kernels and checks
// that both produce identical results.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "orthomean/family.hpp"
#include "orthomean/mean_limits.hpp"
#include "orthomean/summation.hpp"

using clock_type = std::chrono::steady_clock;

static double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int main(int argc, char** argv) {
  const std::size_t n = (argc > 1) ? std::strtoul(argv[1], nullptr, 10) : 300;
  const std::size_t L = (argc > 2) ? std::strtoul(argv[2], nullptr, 10) : 8;

  const orthomean::CoefficientFamily family = orthomean::ultraspherical_family(0.5);
  const orthomean::NorlundMethod method = orthomean::cesaro(1.0);

  auto t0 = clock_type::now();
  const orthomean::MeanMoments lam_s =
      orthomean::lambda_moments(family, method, n, L, /*parallel=*/false);
  const double t_lam_s = seconds_since(t0);

  t0 = clock_type::now();
  const orthomean::MeanMoments lam_p =
      orthomean::lambda_moments(family, method, n, L, /*parallel=*/true);
  const double t_lam_p = seconds_since(t0);

  t0 = clock_type::now();
  const orthomean::RootSample roots_s =
      orthomean::root_sample(family, method, n, /*parallel=*/false);
  const double t_roots_s = seconds_since(t0);

  t0 = clock_type::now();
  const orthomean::RootSample roots_p =
      orthomean::root_sample(family, method, n, /*parallel=*/true);
  const double t_roots_p = seconds_since(t0);

  bool identical = lam_s.moments == lam_p.moments &&
                   roots_s.points.size() == roots_p.points.size();
  if (identical)
    for (std::size_t i = 0; i < roots_s.points.size(); ++i)
      identical = identical && roots_s.points[i] == roots_p.points[i];

  std::printf("n=%zu L=%zu\n", n, L);
  std::printf("lambda_moments  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
              t_lam_s, t_lam_p, t_lam_s / t_lam_p);
  std::printf("root_sample     serial %.3fs  parallel %.3fs  speedup %.2fx\n",
              t_roots_s, t_roots_p, t_roots_s / t_roots_p);
  std::printf("results bitwise identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
