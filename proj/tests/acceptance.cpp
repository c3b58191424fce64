// Acceptance suite: one pass/fail line per criterion; exit 0 iff all pass.
// argv[1] must be the path to the command-line binary (used by the
// determinism criterion).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orthomean/equilibrium.hpp"
#include "orthomean/family.hpp"
#include "orthomean/mean_limits.hpp"
#include "orthomean/summation.hpp"
#include "orthomean/tridiag.hpp"

using namespace orthomean;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << index << ": " << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::vector<const CoefficientFamily*> builtin_families() {
  static const CoefficientFamily ultra = ultraspherical_family(0.5);
  static const CoefficientFamily shifted = jacobi_shift_family(0.3, 1.2);
  static const CoefficientFamily constant = constant_family(legendre_table(512));
  return {&ultra, &shifted, &constant};
}

std::vector<NorlundMethod> builtin_methods() {
  return {arithmetic_mean(), legendre_summation(), cesaro(2.0), gegenbauer(1.0),
          identity_method()};
}

// 1. path enumeration == matrix powers == gauss-rule integration
void criterion_oracle_equivalence() {
  double worst = 0.0;
  for (const CoefficientFamily* f : builtin_families())
    for (std::size_t k = 0; k <= 6; ++k)
      for (std::size_t m = 0; m <= 6; ++m) {
        const QuadratureRule rule = gauss_rule(*f, k, m + 7);
        for (std::size_t l = 0; l <= 10; ++l) {
          const double path = path_enumeration_moment(*f, k, m, l);
          const double power = local_moment(*f, k, m, l);
          double quad = 0.0;
          for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const auto p = eval_orthonormal(*f, k, m, rule.nodes[q]);
            quad += rule.weights[q] * std::pow(rule.nodes[q], l) * p[m] * p[m];
          }
          const double scale = std::max(1.0, std::fabs(power));
          worst = std::max({worst, std::fabs(path - power) / scale,
                            std::fabs(quad - power) / scale});
        }
      }
  report(1, "moment oracle equivalence (path = matrix power = quadrature)",
         worst <= 1e-11, "max rel gap " + std::to_string(worst));
}

// 2. addition formulas are exact finite identities
void criterion_addition_formulas() {
  const double xs[9] = {-0.95, -0.7, -0.4, -0.1, 0.0, 0.2, 0.5, 0.8, 0.99};
  double worst_u = 0.0;
  for (double lambda : {0.5, 1.0, 1.5, 3.0})
    for (std::size_t n = 0; n <= 40; n += 4)
      for (double x : xs)
        worst_u = std::max(worst_u, addition_formula_residual(lambda, n, x));
  double worst_l = 0.0;
  for (std::size_t n = 0; n <= 40; n += 4)
    for (double x : xs)
      worst_l = std::max(worst_l, addition_formula_residual_legendre(n, x));
  report(2, "addition formulas exact", worst_u < 1e-10 && worst_l < 1e-11,
         "ultraspherical " + std::to_string(worst_u) + ", printed form " +
             std::to_string(worst_l));
}

// 3. tau_n, N_n closed forms and the Cesaro-Gegenbauer relations
void criterion_bookkeeping() {
  bool ok = true;
  for (std::size_t n = 0; n <= 500 && ok; ++n) {
    for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
      const NorlundMethod c = cesaro(alpha);
      ok = ok &&
           std::fabs(c.tau(n) - cesaro_tau(alpha, n)) <= 1e-12 * cesaro_tau(alpha, n) &&
           std::fabs(c.normalizer(n) - cesaro_normalizer(alpha, n)) <=
               1e-12 * cesaro_normalizer(alpha, n);
    }
    const NorlundMethod leg = legendre_summation();
    ok = ok && std::fabs(leg.tau(n) - legendre_tau(n)) <= 1e-12 * legendre_tau(n) &&
         std::fabs(leg.normalizer(n) - legendre_normalizer(n)) <=
             1e-12 * legendre_normalizer(n);
    for (double nu : {0.25, 0.5, 1.0, 2.0}) {
      const NorlundMethod g = gegenbauer(nu);
      ok = ok &&
           std::fabs(g.tau(n) - gegenbauer_tau(nu, n)) <= 1e-12 * gegenbauer_tau(nu, n) &&
           std::fabs(g.normalizer(n) - gegenbauer_normalizer(nu, n)) <=
               1e-12 * gegenbauer_normalizer(nu, n);
      const NorlundMethod c = cesaro(2.0 * nu);
      const double sig_rel =
          (n == 0) ? c.sigma(0) : c.sigma(n) + c.sigma(n - 1);
      ok = ok && std::fabs(g.sigma(n) - sig_rel) <= 1e-12 * std::fabs(sig_rel);
      if (n > 0) {
        const double tau_rel = 1.0 / (1.0 / c.tau(n) + 1.0 / c.tau(n - 1));
        ok = ok && std::fabs(g.tau(n) - tau_rel) <= 1e-12 * tau_rel;
      }
    }
  }
  report(3, "closed-form tau_n / N_n bookkeeping and Cesaro-Gegenbauer relations",
         ok);
}

// 4. path-count evaluation of the Sigma closed forms equals the exact
//    equilibrium moments
void criterion_consistency_chain() {
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
    const EquilibriumMeasure m = gegenbauer_equilibrium(alpha);
    auto sigma = [alpha](std::size_t l_a, std::size_t l_b) {
      return sigma_cesaro(alpha, l_a, l_b);
    };
    for (std::size_t l = 0; l <= 12; l += 2)
      worst = std::max(worst,
                       std::fabs(equilibrium_moment_from_sigma(sigma, l) - m.moment(l)));
  }
  struct AB {
    double a, b;
  };
  for (const AB p : {AB{0.0, 0.5}, AB{1.0, 1.0}, AB{-0.3, 0.7}}) {
    const EquilibriumMeasure m = arcsine_measure(p.a, p.b);
    auto sigma = [p](std::size_t l_a, std::size_t l_b) {
      return sigma_uniform_nevai(p.a, p.b, l_a, l_b);
    };
    for (std::size_t l = 0; l <= 10; ++l)
      worst = std::max(
          worst, std::fabs(equilibrium_moment_from_sigma(sigma, l) - m.moment(l)) /
                     std::max(1.0, std::fabs(m.moment(l))));
    for (double alpha : {1.0, 2.0}) {
      const EquilibriumMeasure img =
          affine_transfer(gegenbauer_equilibrium(alpha), p.a, p.b);
      auto s2 = [p, alpha](std::size_t l_a, std::size_t l_b) {
        return sigma_affine_cesaro(p.a, p.b, alpha, l_a, l_b);
      };
      for (std::size_t l = 0; l <= 10; ++l)
        worst = std::max(
            worst, std::fabs(equilibrium_moment_from_sigma(s2, l) - img.moment(l)) /
                       std::max(1.0, std::fabs(img.moment(l))));
    }
  }
  report(4, "sigma closed forms reproduce equilibrium moments", worst <= 1e-12,
         "max gap " + std::to_string(worst));
}

// 5. Sigma_{0,2} partial sums approach 1/6
void criterion_sigma_convergence() {
  const CoefficientFamily f = ultraspherical_family(0.5);
  const SummationMethod m = cesaro(1.0).as_summation();
  const double at200 = std::fabs(sigma_partial(f, m, 200, 0, 2) - 1.0 / 6.0);
  const double at2000 = std::fabs(sigma_partial(f, m, 2000, 0, 2) - 1.0 / 6.0);
  report(5, "Sigma_{0,2} partial-sum convergence toward 1/6",
         at2000 < 1e-2 && at2000 < at200,
         "gap(200)=" + std::to_string(at200) + " gap(2000)=" + std::to_string(at2000));
}

// 6. finite-n moment bound between nu and lambda
void criterion_nu_lambda_bound() {
  bool ok = true;
  for (const CoefficientFamily* f : builtin_families()) {
    const auto [A, B] = f->coeff_bounds();
    for (const NorlundMethod& m : builtin_methods())
      for (std::size_t n : {std::size_t{25}, std::size_t{50}, std::size_t{100}}) {
        const auto nu = sample_moments(root_sample(*f, m, n), 8);
        const MeanMoments lam = lambda_moments(*f, m, n, 8);
        for (std::size_t l = 0; l <= 8; ++l) {
          const double bound = 2.0 * static_cast<double>(l) *
                               std::pow(A + 2.0 * B, static_cast<double>(l)) /
                               m.normalizer(n);
          ok = ok && std::fabs(nu[l] - lam.moments[l]) <= bound + 1e-12;
        }
      }
  }
  report(6, "nu vs lambda moment gap within 2l(A+2B)^l / N_n", ok);
}

// 7. root histograms discriminate the three limit measures and tighten with n
void criterion_panels() {
  const CoefficientFamily ultra = ultraspherical_family(0.5);
  const CoefficientFamily constant = constant_family(legendre_table(2048));
  const EquilibriumMeasure arcsine = arcsine_measure(0.0, 0.5);
  const EquilibriumMeasure uniform = gegenbauer_equilibrium(1.0);
  const EquilibriumMeasure semi = gegenbauer_equilibrium(2.0);
  struct Panel {
    const CoefficientFamily* family;
    NorlundMethod method;
    const EquilibriumMeasure* target;
  };
  const Panel panels[3] = {{&constant, arithmetic_mean(), &arcsine},
                           {&ultra, cesaro(1.0), &uniform},
                           {&ultra, cesaro(2.0), &semi}};
  const EquilibriumMeasure* all[3] = {&arcsine, &uniform, &semi};
  bool ok = true;
  std::ostringstream detail;
  for (int p = 0; p < 3; ++p) {
    const RootSample s100 = root_sample(*panels[p].family, panels[p].method, 100);
    const double own = ks_distance(s100, *panels[p].target);
    for (int q = 0; q < 3; ++q)
      if (all[q] != panels[p].target)
        ok = ok && own < ks_distance(s100, *all[q]);
    const double d50 =
        ks_distance(root_sample(*panels[p].family, panels[p].method, 50),
                    *panels[p].target);
    const double d200 =
        ks_distance(root_sample(*panels[p].family, panels[p].method, 200),
                    *panels[p].target);
    ok = ok && d200 < d50 && own < d50 && d200 < own;
    detail << (p ? " " : "") << "panel" << p << ":ks100=" << own;
  }
  report(7, "panel discrimination and KS decay of the root measure", ok,
         detail.str());
}

// 8. the two lambda computation routes agree
void criterion_lambda_routes() {
  bool ok = true;
  std::string detail;
  try {
    for (const CoefficientFamily* f : builtin_families())
      for (const NorlundMethod& m : builtin_methods())
        for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{5},
                              std::size_t{25}, std::size_t{100}, std::size_t{200}}) {
          // lambda_moments throws if the direct and the Riesz route differ by
          // more than 1e-10 relative at any order
          const MeanMoments mm = lambda_moments(*f, m, n, 10);
          ok = ok && std::fabs(mm.moments[0] - 1.0) <= 1e-12;
        }
  } catch (const std::runtime_error& e) {
    ok = false;
    detail = e.what();
  }
  report(8, "lambda moments: direct sum equals Riesz decomposition", ok, detail);
}

// 9. regularity of the built-in methods and their derived Riesz schemes
void criterion_regularity() {
  bool ok = true;
  for (const NorlundMethod& m : builtin_methods()) {
    ok = ok && regularity_check(m.as_summation(), 2000, 10).passed();
    ok = ok && regularity_check(riesz_derived(m), 2000, 10).passed();
    for (std::size_t n = 0; n <= 2000; n += 7) {
      const double N = m.normalizer(n);
      ok = ok && N >= 1.0 - 1e-12 && N <= n + 1.0 + 1e-12;
    }
  }
  report(9, "regularity of built-in and derived Riesz methods, N_n bounds", ok);
}

// supplementary: abs gaps of the moment tables shrink across n_list
// (50, 100, 200) for every order, ignoring pure rounding noise below 1e-12
void supplementary_moment_trend() {
  const CoefficientFamily f = ultraspherical_family(0.5);
  const NorlundMethod m = cesaro(1.0);
  const EquilibriumMeasure eq = gegenbauer_equilibrium(1.0);
  const std::size_t ns[3] = {50, 100, 200};
  bool ok = true;
  for (int kind = 0; kind < 3; ++kind) {
    double prev[9];
    for (int i = 0; i < 3; ++i) {
      std::vector<double> mom;
      if (kind == 0)
        mom = mu_bar_moments(f, m.as_summation(), ns[i], 8).moments;
      else if (kind == 1)
        mom = lambda_moments(f, m, ns[i], 8).moments;
      else
        mom = sample_moments(root_sample(f, m, ns[i]), 8);
      for (std::size_t l = 0; l <= 8; ++l) {
        const double gap = std::fabs(mom[l] - eq.moment(l));
        if (i > 0 && gap > 1e-12) ok = ok && gap <= prev[l];
        prev[l] = std::max(gap, 1e-12);
      }
    }
  }
  std::cout << (ok ? "PASS" : "FAIL")
            << "  supplementary: moment abs_gap non-increasing across n"
            << std::endl;
  if (!ok) ++failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 10. byte-identical output across repeated runs
void criterion_determinism(const std::string& cli) {
  bool ok = true;
  std::string detail;
  const std::string base = "acceptance_det";
  for (const char* run : {"a", "b"}) {
    const std::string dir = base + "_" + run;
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    const std::string common =
        " --family ultraspherical --lambda 0.5 --method cesaro --alpha 1"
        " --n 50 --n 100 --L 8 --bins 40 --out " + dir;
    int rc = std::system((cli + common + " roots-hist > " + dir +
                          "/stdout_hist.txt 2> /dev/null").c_str());
    ok = ok && rc == 0;
    rc = std::system((cli + common + " check > " + dir +
                      "/stdout_check.txt 2> /dev/null").c_str());
    ok = ok && rc == 0;
  }
  if (ok)
    for (const char* file : {"hist_50.csv", "hist_100.csv", "equilibrium.csv",
                             "stdout_hist.txt", "stdout_check.txt"}) {
      const std::string a = slurp(base + "_a/" + std::string(file));
      const std::string b = slurp(base + "_b/" + std::string(file));
      if (a.empty() || a != b) {
        ok = false;
        detail = std::string("mismatch in ") + file;
      }
    }
  else
    detail = "command failed";
  std::system(("rm -rf " + base + "_a " + base + "_b").c_str());
  report(10, "deterministic byte-identical output across runs", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>" << std::endl;
    return 2;
  }
  const auto t0 = std::chrono::steady_clock::now();
  criterion_oracle_equivalence();
  criterion_addition_formulas();
  criterion_bookkeeping();
  criterion_consistency_chain();
  criterion_sigma_convergence();
  criterion_nu_lambda_bound();
  criterion_panels();
  criterion_lambda_routes();
  criterion_regularity();
  criterion_determinism(argv[1]);
  supplementary_moment_trend();
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures))
            << "  (" << elapsed << "s)" << std::endl;
  return failures == 0 ? 0 : 1;
}
