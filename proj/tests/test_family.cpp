#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "orthomean/family.hpp"
#include "orthomean/quadrature.hpp"

using namespace orthomean;

TEST_CASE("ultraspherical coefficients: Legendre case") {
  const CoefficientFamily f = ultraspherical_family(0.5, 64, 64);
  CHECK(f.coeff(0, 1).b == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  // k = 0 row is the plain Legendre recurrence j/sqrt(4j^2-1)
  for (std::size_t j = 1; j <= 30; ++j)
    CHECK(f.coeff(0, j).b ==
          doctest::Approx(j / std::sqrt(4.0 * j * j - 1.0)).epsilon(1e-14));
  CHECK(f.mass(0) == doctest::Approx(2.0).epsilon(1e-14));
  for (std::size_t k = 0; k <= 20; ++k)
    for (std::size_t j = 0; j <= 20; ++j) CHECK(f.coeff(k, j).a == 0.0);
}

TEST_CASE("ultraspherical lambda=0: Chebyshev limit b_1 = 1/sqrt(2)") {
  const CoefficientFamily f = ultraspherical_family(0.0, 32, 32);
  CHECK(f.coeff(0, 1).b == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  for (std::size_t j = 2; j <= 20; ++j)
    CHECK(f.coeff(0, j).b == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("ultraspherical b tends to 1/2 in j for fixed k") {
  for (double lambda : {0.5, 1.5, 3.0}) {
    const CoefficientFamily f = ultraspherical_family(lambda, 256, 8);
    for (std::size_t k : {std::size_t{0}, std::size_t{3}})
      for (std::size_t j = 21; j <= 200; j += 17)
        CHECK(std::fabs(f.coeff(k, j).b - 0.5) < 10.0 / j);
  }
}

TEST_CASE("jacobi shift family: Chebyshev-T at lambda1=lambda2=-1/2") {
  const CoefficientFamily f = jacobi_shift_family(-0.5, -0.5, 32, 32);
  CHECK(f.coeff(0, 1).b == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
  for (std::size_t j = 2; j <= 20; ++j)
    CHECK(f.coeff(0, j).b == doctest::Approx(0.5).epsilon(1e-13));
  for (std::size_t j = 0; j <= 20; ++j)
    CHECK(f.coeff(0, j).a == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(f.mass(0) == doctest::Approx(M_PI).epsilon(1e-13));
}

TEST_CASE("jacobi shift (0,0) coincides with ultraspherical(1/2) at k=0") {
  const CoefficientFamily j = jacobi_shift_family(0.0, 0.0, 64, 8);
  const CoefficientFamily u = ultraspherical_family(0.5, 64, 8);
  for (std::size_t i = 0; i <= 40; ++i) {
    CHECK(std::fabs(j.coeff(0, i).a - u.coeff(0, i).a) < 1e-13);
    if (i >= 1) CHECK(std::fabs(j.coeff(0, i).b - u.coeff(0, i).b) < 1e-13);
  }
}

TEST_CASE("jacobi shift symmetric parameters: a = 0 for all k") {
  const CoefficientFamily f = jacobi_shift_family(0.0, 0.0, 32, 32);
  for (std::size_t k = 0; k <= 10; ++k)
    for (std::size_t j = 0; j <= 20; ++j)
      CHECK(f.coeff(k, j).a == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("constant family replicates its table across k") {
  const CoefficientFamily f = constant_family(legendre_table(32));
  for (std::size_t k = 1; k <= 12; ++k)
    for (std::size_t j = 0; j <= 32; ++j) {
      CHECK(f.coeff(k, j).a == f.coeff(0, j).a);
      CHECK(f.coeff(k, j).b == f.coeff(0, j).b);
    }
}

TEST_CASE("coefficient table with a nonpositive b is rejected") {
  CoefficientTable t = legendre_table(10);
  t.b[5] = 0.0;
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  CHECK_THROWS_AS(constant_family(t), std::invalid_argument);
}

TEST_CASE("stieltjes oracle: uniform weight reproduces Legendre") {
  const CoefficientTable t =
      stieltjes_coefficients([](double) { return 1.0; }, -1.0, 1.0, 4);
  CHECK(t.a[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(t.b[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(t.b[2] == doctest::Approx(2.0 / std::sqrt(15.0)).epsilon(1e-12));
  CHECK(t.b[3] == doctest::Approx(3.0 / std::sqrt(35.0)).epsilon(1e-12));
}

TEST_CASE("stieltjes oracle: Chebyshev-U weight gives b = 1/2") {
  const CoefficientTable t = stieltjes_coefficients([](double) { return 1.0; },
                                                    -1.0, 1.0, 3, 0.5, 0.5);
  for (std::size_t j = 1; j <= 2; ++j)
    CHECK(t.b[j] == doctest::Approx(0.5).epsilon(1e-11));
  for (std::size_t j = 0; j <= 2; ++j)
    CHECK(t.a[j] == doctest::Approx(0.0).epsilon(1e-11));
}

TEST_CASE("stieltjes oracle vs jacobi shift closed form, weight (1+x)") {
  const CoefficientTable t = stieltjes_coefficients([](double) { return 1.0; },
                                                    -1.0, 1.0, 6, 1.0, 0.0);
  const CoefficientFamily f = jacobi_shift_family(0.0, 1.0, 16, 4);
  CHECK(std::fabs(t.a[1] - f.coeff(0, 1).a) < 1e-10);
  for (std::size_t j = 0; j <= 5; ++j) {
    CHECK(std::fabs(t.a[j] - f.coeff(0, j).a) < 1e-9);
    if (j >= 1) CHECK(std::fabs(t.b[j] - f.coeff(0, j).b) < 1e-9);
  }
}

TEST_CASE("stieltjes oracle matches the closed-form families, incl. singular weights") {
  struct Case {
    double lambda;
    std::size_t k;
  };
  for (const Case c : {Case{0.0, 0}, Case{0.5, 0}, Case{0.5, 2}, Case{1.5, 1}}) {
    const CoefficientFamily f = ultraspherical_family(c.lambda, 32, 8);
    const double g = c.k + c.lambda - 0.5;  // weight (1-x^2)^g
    const CoefficientTable t = stieltjes_coefficients([](double) { return 1.0; },
                                                      -1.0, 1.0, 8, g, g);
    for (std::size_t j = 0; j <= 7; ++j) {
      CHECK(std::fabs(t.a[j] - f.coeff(c.k, j).a) < 1e-8);
      if (j >= 1) CHECK(std::fabs(t.b[j] - f.coeff(c.k, j).b) < 1e-8);
    }
  }
}

TEST_CASE("mass matches direct numeric integration of the weight") {
  for (double lambda : {0.0, 0.5, 2.0}) {
    const CoefficientFamily f = ultraspherical_family(lambda, 8, 24);
    for (std::size_t k : {std::size_t{0}, std::size_t{5}, std::size_t{20}}) {
      const double g = k + lambda - 0.5;
      const double direct =
          integrate_weighted([](double) { return 1.0; }, -1.0, 1.0, g, g);
      CHECK(f.mass(k) == doctest::Approx(direct).epsilon(1e-10));
    }
  }
  const CoefficientFamily j = jacobi_shift_family(0.3, 1.7, 8, 24);
  for (std::size_t k : {std::size_t{0}, std::size_t{4}, std::size_t{20}}) {
    const double direct = integrate_weighted([](double) { return 1.0; }, -1.0, 1.0,
                                             1.7 + k, 0.3 + k);
    CHECK(j.mass(k) == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("coeff_bounds are true suprema over the scanned rectangle") {
  const CoefficientFamily f = jacobi_shift_family(0.7, -0.2, 50, 50);
  const auto [A, B] = f.coeff_bounds();
  for (std::size_t k = 0; k <= 50; ++k)
    for (std::size_t j = 0; j <= 50; ++j) {
      const RecurrencePair p = f.coeff(k, j);
      CHECK(std::fabs(p.a) <= A);
      if (j >= 1) CHECK(p.b <= B);
    }
}

TEST_CASE("uniform nevai report: constant Legendre family") {
  const CoefficientFamily f = constant_family(legendre_table(256));
  const NevaiDeviationReport rep = uniform_nevai_report(f, 0.0, 0.5, 200, 8);
  REQUIRE(rep.rows.size() == 200);
  const auto& last = rep.rows.back();
  CHECK(last.n == 200);
  CHECK(last.sup_a_dev == 0.0);
  CHECK(last.sup_b_dev ==
        doctest::Approx(std::fabs(200.0 / std::sqrt(159999.0) - 0.5)).epsilon(1e-12));
  CHECK(last.sup_b_dev < 2e-6);
  CHECK(rep.monotone_after_onset);
}

TEST_CASE("uniform nevai report: ultraspherical is not uniform in k") {
  const CoefficientFamily f = ultraspherical_family(0.5, 256, 256);
  const NevaiDeviationReport rep = uniform_nevai_report(f, 0.0, 0.5, 100, 100);
  // At k = j the ratio k/j stays 1, so b stays near sqrt(2)/2 - like values
  // bounded away from 1/2: the sup over k does not decay.
  CHECK(rep.rows.back().sup_b_dev > 0.05);
}

TEST_CASE("uniform nevai report boundary: n_max = 1") {
  const CoefficientFamily f = constant_family(legendre_table(8));
  const NevaiDeviationReport rep = uniform_nevai_report(f, 0.0, 0.5, 1, 2);
  CHECK(rep.rows.size() == 1);
}

TEST_CASE("coefficient table CSV round trip is exact") {
  const CoefficientTable t = legendre_table(40);
  const std::string path = "table_roundtrip_test.csv";
  write_table_csv(t, path);
  const CoefficientTable back = read_table_csv(path, t.mass);
  REQUIRE(back.a.size() == t.a.size());
  for (std::size_t j = 0; j < t.a.size(); ++j) {
    CHECK(back.a[j] == t.a[j]);
    CHECK(back.b[j] == t.b[j]);
  }
  std::remove(path.c_str());
}
