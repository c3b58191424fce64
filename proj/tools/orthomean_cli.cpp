// Command-line surface: convergence reports, figure data, sigma tables, and
// the self-check suite.  Exit codes: 0 ok, 1 check failure, 2 configuration
// error, 3 numeric error.
#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orthomean/config.hpp"
#include "orthomean/csv.hpp"
#include "orthomean/equilibrium.hpp"
#include "orthomean/family.hpp"
#include "orthomean/mean_limits.hpp"
#include "orthomean/summation.hpp"
#include "orthomean/tridiag.hpp"

namespace om = orthomean;

namespace {

std::size_t moment_cap() {
  if (const char* env = std::getenv("ORTHOMEAN_MAX_L")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || v < 0)
      throw std::invalid_argument("ORTHOMEAN_MAX_L must be a nonnegative integer");
    return static_cast<std::size_t>(v);
  }
  return om::kDefaultMomentCap;
}

std::string out_path(const om::RunConfig& cfg, const std::string& file) {
  if (cfg.output.empty() || cfg.output == ".") return file;
  return cfg.output + "/" + file;
}

const char* kind_name(om::MeanKind k) {
  switch (k) {
    case om::MeanKind::mu_bar: return "mu_bar";
    case om::MeanKind::lambda: return "lambda";
    case om::MeanKind::nu: return "nu";
  }
  return "?";
}

int cmd_moments(const om::RunConfig& cfg) {
  const om::CoefficientFamily family = cfg.family.build();
  const om::NorlundMethod method = cfg.method.build();
  const om::EquilibriumMeasure eq = om::pick_equilibrium(cfg.family, cfg.method);
  for (const std::size_t n : cfg.n_list) {
    std::cerr << "moments: n=" << n << "\n";
    const om::MeanMoments mu =
        om::mu_bar_moments(family, method.as_summation(), n, cfg.L);
    const om::MeanMoments lam = om::lambda_moments(family, method, n, cfg.L);
    const om::MeanMoments nu = [&] {
      om::MeanMoments m;
      m.n = n;
      m.kind = om::MeanKind::nu;
      m.moments = om::sample_moments(om::root_sample(family, method, n), cfg.L);
      return m;
    }();
    for (const om::MeanMoments* mm : {&mu, &lam, &nu}) {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t l = 0; l < mm->moments.size(); ++l) {
        const double value = mm->moments[l];
        const double target = eq.moment(l);
        rows.push_back({std::to_string(l), om::format_double(value),
                        om::format_double(target),
                        om::format_double(std::fabs(value - target))});
      }
      const std::string file =
          "moments_" + std::string(kind_name(mm->kind)) + "_" + std::to_string(n) + ".csv";
      om::write_csv(out_path(cfg, file), "l,value,equilibrium,abs_gap", rows);
    }
  }
  return 0;
}

int cmd_roots_hist(const om::RunConfig& cfg) {
  const om::CoefficientFamily family = cfg.family.build();
  const om::NorlundMethod method = cfg.method.build();
  const om::EquilibriumMeasure eq = om::pick_equilibrium(cfg.family, cfg.method);
  const double lo = eq.support_lo();
  const double hi = eq.support_hi();
  for (const std::size_t n : cfg.n_list) {
    std::cerr << "roots-hist: n=" << n << "\n";
    const om::RootSample sample = om::root_sample(family, method, n);
    std::vector<double> mass(cfg.bins, 0.0);
    const double width = (hi - lo) / static_cast<double>(cfg.bins);
    for (const auto& [x, w] : sample.points) {
      std::size_t bin = 0;
      if (x >= hi)
        bin = cfg.bins - 1;
      else if (x > lo)
        bin = std::min(cfg.bins - 1,
                       static_cast<std::size_t>(std::floor((x - lo) / width)));
      mass[bin] += w;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t b = 0; b < cfg.bins; ++b)
      rows.push_back({om::format_double(lo + width * static_cast<double>(b)),
                      om::format_double(lo + width * static_cast<double>(b + 1)),
                      om::format_double(mass[b])});
    om::write_csv(out_path(cfg, "hist_" + std::to_string(n) + ".csv"),
                  "bin_left,bin_right,weighted_mass", rows);
    std::cout << "n=" << n << " ks=" << om::format_double(om::ks_distance(sample, eq))
              << "\n";
  }
  std::vector<std::vector<std::string>> curve;
  for (std::size_t i = 0; i < 1001; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / 1000.0;
    curve.push_back({om::format_double(x), om::format_double(eq.density(x))});
  }
  om::write_csv(out_path(cfg, "equilibrium.csv"), "x,density", curve);
  return 0;
}

int cmd_equilibrium(const om::RunConfig& cfg) {
  const om::EquilibriumMeasure eq = om::pick_equilibrium(cfg.family, cfg.method);
  const double lo = eq.support_lo();
  const double hi = eq.support_hi();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < 1001; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / 1000.0;
    rows.push_back({om::format_double(x), om::format_double(eq.density(x)),
                    om::format_double(eq.cdf(x))});
  }
  om::write_csv(out_path(cfg, "equilibrium_curve.csv"), "x,density,cdf", rows);
  return 0;
}

int cmd_sigma_table(const om::RunConfig& cfg) {
  const om::CoefficientFamily family = cfg.family.build();
  const om::NorlundMethod method = cfg.method.build();
  std::vector<std::vector<std::string>> rows;
  for (const std::size_t n : cfg.n_list) {
    std::cerr << "sigma-table: n=" << n << "\n";
    for (std::size_t l_a = 0; l_a <= 2; ++l_a)
      for (std::size_t l_b = 0; l_b <= std::min<std::size_t>(cfg.L, 6); l_b += 2) {
        const double partial =
            om::sigma_partial(family, method.as_summation(), n, l_a, l_b);
        const double closed =
            om::pick_sigma_closed_form(cfg.family, cfg.method, l_a, l_b);
        rows.push_back({std::to_string(n), std::to_string(l_a), std::to_string(l_b),
                        om::format_double(partial), om::format_double(closed),
                        om::format_double(std::fabs(partial - closed))});
      }
  }
  om::write_csv(out_path(cfg, "sigma.csv"), "n,l_a,l_b,partial,closed_form,abs_gap",
                rows);
  return 0;
}

struct CheckTable {
  bool all_ok = true;
  void row(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    all_ok = all_ok && ok;
  }
};

int cmd_check(const om::RunConfig& cfg) {
  const om::CoefficientFamily family = cfg.family.build();
  const om::NorlundMethod method = cfg.method.build();
  CheckTable table;

  std::size_t n_reg = 2000;
  if (cfg.method.kind == om::MethodSpec::Kind::custom) {
    const std::size_t rows = om::read_csv(cfg.method.sigma_file).size();
    if (rows == 0) throw std::invalid_argument("sigma file: no rows");
    n_reg = std::min<std::size_t>(n_reg, rows - 1);
    if (n_reg < 2) throw std::invalid_argument("sigma file: need at least 3 rows");
  }

  const std::size_t col_onset = std::min<std::size_t>(10, n_reg);
  {
    const om::RegularityReport rep =
        om::regularity_check(method.as_summation(), n_reg, col_onset);
    std::ostringstream detail;
    if (!rep.passed())
      detail << "failing (n,k)=(" << rep.fail_n << "," << rep.fail_k << ")";
    table.row("regularity: base method, n <= " + std::to_string(n_reg), rep.passed(),
              detail.str());
    if (rep.passed()) {
      const om::RegularityReport rz =
          om::regularity_check(om::riesz_derived(method), n_reg, col_onset);
      std::ostringstream d2;
      if (!rz.passed())
        d2 << "failing (n,k)=(" << rz.fail_n << "," << rz.fail_k << ")";
      table.row("regularity: derived Riesz method", rz.passed(), d2.str());
    }
  }

  if (table.all_ok) {
    bool ok = true;
    for (std::size_t n = 0; n <= n_reg && ok; n += (n < 64 ? 1 : 97)) {
      const double N = method.normalizer(n);
      ok = N >= 1.0 - 1e-12 && N <= n + 1.0 + 1e-12;
    }
    table.row("normalizer bounds 1 <= N_n <= n+1", ok);
  }

  {
    bool ok = true;
    double worst = 0.0;
    for (std::size_t k = 0; k <= 3 && ok; ++k)
      for (std::size_t m = 0; m <= 3 && ok; ++m)
        for (std::size_t l = 0; l <= 6 && ok; ++l) {
          const double p = om::path_enumeration_moment(family, k, m, l);
          const double q = om::local_moment(family, k, m, l);
          const double gap = std::fabs(p - q) / std::max(1.0, std::fabs(q));
          worst = std::max(worst, gap);
          ok = gap <= 1e-11;
        }
    table.row("moment oracle equivalence (path vs matrix power)", ok,
              "max rel gap " + om::format_double(worst));
  }

  {
    const std::size_t n = std::min<std::size_t>(cfg.n_list.back(), 100);
    bool ok = true;
    std::string detail;
    try {
      const om::MeanMoments lam = om::lambda_moments(family, method, n, cfg.L);
      ok = std::fabs(lam.moments.at(0) - 1.0) <= 1e-12;
    } catch (const std::runtime_error& e) {
      ok = false;
      detail = e.what();
    }
    table.row("lambda moment routes agree (n=" + std::to_string(n) + ")", ok, detail);
  }

  if (cfg.family.kind == om::FamilySpec::Kind::ultraspherical &&
      cfg.family.lambda > 0.0) {
    double worst = 0.0;
    for (const double x : {-0.9, -0.3, 0.0, 0.5, 0.9})
      worst = std::max(worst,
                       om::addition_formula_residual(cfg.family.lambda, 20, x));
    table.row("addition formula residual (n=20)", worst < 1e-10,
              "max " + om::format_double(worst));
  }

  {
    bool ok = true;
    const std::size_t n = std::min<std::size_t>(cfg.n_list.back(), 50);
    for (std::size_t k = 0; k <= n && ok; k += std::max<std::size_t>(1, n / 4))
      for (std::size_t l = 0; l <= 6 && ok; ++l) {
        const om::SimonGap g = om::simon_gap(family, n, k, l);
        ok = g.gap <= g.bound + 1e-9;
      }
    table.row("kernel/root moment gap within 2l(A+2B)^l", ok);
  }

  {
    const std::size_t n = std::min<std::size_t>(cfg.n_list.back(), 200);
    const om::RootSample sample = om::root_sample(family, method, n);
    double sum = 0.0;
    for (const auto& [x, w] : sample.points) sum += w;
    table.row("root sample weights sum to 1",
              std::fabs(sum - 1.0) <= 1e-10, om::format_double(sum));
  }

  {
    bool ok = true;
    double worst = 0.0;
    try {
      const om::EquilibriumMeasure eq = om::pick_equilibrium(cfg.family, cfg.method);
      auto sigma = [&](std::size_t l_a, std::size_t l_b) {
        return om::pick_sigma_closed_form(cfg.family, cfg.method, l_a, l_b);
      };
      for (std::size_t l = 0; l <= std::min<std::size_t>(cfg.L, 8); ++l) {
        const double gap =
            std::fabs(om::equilibrium_moment_from_sigma(sigma, l) - eq.moment(l));
        worst = std::max(worst, gap);
        ok = ok && gap <= 1e-12;
      }
      table.row("sigma limits reproduce equilibrium moments", ok,
                "max gap " + om::format_double(worst));
    } catch (const std::invalid_argument&) {
      // no closed form for this combination; nothing to check
    }
  }

  return table.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted means of orthogonal polynomial measures"};
  app.require_subcommand(1);

  std::string config_file;
  std::string family_name;
  std::string method_name;
  double lambda = 0.5, lambda1 = 0.0, lambda2 = 0.0, alpha = 1.0, nu = 0.5;
  std::string table_path, sigma_file;
  std::vector<std::size_t> n_values;
  std::size_t L = 0;
  std::size_t bins = 0;
  std::string out_dir;

  app.add_option("--config", config_file, "JSON run configuration");
  app.add_option("--family", family_name,
                 "ultraspherical | jacobi_shift | legendre | table");
  app.add_option("--lambda", lambda, "ultraspherical parameter");
  app.add_option("--lambda1", lambda1, "jacobi shift parameter");
  app.add_option("--lambda2", lambda2, "jacobi shift parameter");
  app.add_option("--table", table_path, "coefficient table CSV (family=table)");
  app.add_option("--method", method_name,
                 "arithmetic | legendre | cesaro | gegenbauer | identity | custom");
  app.add_option("--alpha", alpha, "Cesaro order");
  app.add_option("--nu", nu, "Gegenbauer order");
  app.add_option("--sigma-file", sigma_file, "custom sigma CSV (method=custom)");
  app.add_option("--n", n_values, "indices n (ascending)");
  app.add_option("--L", L, "moment order cap");
  app.add_option("--bins", bins, "histogram bin count");
  app.add_option("--out", out_dir, "output directory");

  auto* sub_moments = app.add_subcommand("moments", "moment tables vs equilibrium");
  auto* sub_hist = app.add_subcommand("roots-hist", "weighted root histogram");
  auto* sub_eq = app.add_subcommand("equilibrium", "equilibrium density/cdf curve");
  auto* sub_sigma = app.add_subcommand("sigma-table", "partial sums vs closed forms");
  auto* sub_check = app.add_subcommand("check", "invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    om::RunConfig cfg;
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw std::invalid_argument("cannot open config file " + config_file);
      std::stringstream buf;
      buf << in.rdbuf();
      cfg = om::RunConfig::from_json(buf.str());
    }
    if (!family_name.empty()) {
      if (family_name == "ultraspherical") {
        cfg.family.kind = om::FamilySpec::Kind::ultraspherical;
      } else if (family_name == "jacobi_shift") {
        cfg.family.kind = om::FamilySpec::Kind::jacobi_shift;
      } else if (family_name == "legendre" || family_name == "constant") {
        cfg.family.kind = om::FamilySpec::Kind::constant;
      } else if (family_name == "table") {
        cfg.family.kind = om::FamilySpec::Kind::table;
      } else {
        throw std::invalid_argument("unknown family: " + family_name);
      }
    }
    if (app.count("--lambda")) cfg.family.lambda = lambda;
    if (app.count("--lambda1")) cfg.family.lambda1 = lambda1;
    if (app.count("--lambda2")) cfg.family.lambda2 = lambda2;
    if (app.count("--table")) cfg.family.path = table_path;
    if (!method_name.empty()) {
      om::MethodSpec m = om::MethodSpec::from_json("{\"method\":\"" + method_name + "\"}");
      m.alpha = cfg.method.alpha;
      m.nu = cfg.method.nu;
      m.sigma_file = cfg.method.sigma_file;
      cfg.method = m;
    }
    if (app.count("--alpha")) cfg.method.alpha = alpha;
    if (app.count("--nu")) cfg.method.nu = nu;
    if (app.count("--sigma-file")) cfg.method.sigma_file = sigma_file;
    if (!n_values.empty()) cfg.n_list = n_values;
    if (app.count("--L")) cfg.L = L;
    if (app.count("--bins")) cfg.bins = bins;
    if (app.count("--out")) cfg.output = out_dir;

    cfg.validate(moment_cap());

    if (*sub_moments) return cmd_moments(cfg);
    if (*sub_hist) return cmd_roots_hist(cfg);
    if (*sub_eq) return cmd_equilibrium(cfg);
    if (*sub_sigma) return cmd_sigma_table(cfg);
    if (*sub_check) return cmd_check(cfg);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  }
}
