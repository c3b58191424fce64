#include "orthomean/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace orthomean {

JacobiMatrix jacobi_matrix(const CoefficientFamily& family, std::size_t k,
                           std::size_t size) {
  if (size < 1) throw std::invalid_argument("jacobi_matrix: size must be >= 1");
  JacobiMatrix J;
  J.diag.resize(size);
  J.offdiag.resize(size - 1);
  for (std::size_t j = 0; j < size; ++j) {
    const RecurrencePair p = family.coeff(k, j);
    J.diag[j] = p.a;
    if (j >= 1) J.offdiag[j - 1] = p.b;
  }
  return J;
}

namespace {

// Implicit-shift QL for a symmetric tridiagonal matrix.  When z is non-null
// it starts as the first row of the identity and ends as the first components
// of the normalized eigenvectors (all that Golub-Welsch needs).
void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>* z) {
  const std::size_t n = d.size();
  constexpr int kMaxIter = 50;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  e.push_back(0.0);  // e[n-1] sentinel

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxIter)
          throw std::runtime_error("tridiag eigensolver: no convergence at index " +
                                   std::to_string(l));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            f = (*z)[i + 1];
            (*z)[i + 1] = s * (*z)[i] + c * f;
            (*z)[i] = c * (*z)[i] - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  e.pop_back();

  // sort ascending, carrying z along
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  std::vector<double> ds(n);
  for (std::size_t i = 0; i < n; ++i) ds[i] = d[order[i]];
  d.swap(ds);
  if (z) {
    std::vector<double> zs(n);
    for (std::size_t i = 0; i < n; ++i) zs[i] = (*z)[order[i]];
    z->swap(zs);
  }
}

}  // namespace

std::vector<double> eigen_roots(const JacobiMatrix& J) {
  std::vector<double> d = J.diag;
  std::vector<double> e = J.offdiag;
  tridiag_ql(d, e, nullptr);
  return d;
}

QuadratureRule gauss_rule(const CoefficientFamily& family, std::size_t k,
                          std::size_t m) {
  if (m < 1) throw std::invalid_argument("gauss_rule: node count must be >= 1");
  const JacobiMatrix J = jacobi_matrix(family, k, m);
  std::vector<double> d = J.diag;
  std::vector<double> e = J.offdiag;
  std::vector<double> z(m, 0.0);
  z[0] = 1.0;
  tridiag_ql(d, e, &z);
  QuadratureRule rule;
  rule.nodes = std::move(d);
  rule.weights.resize(m);
  const double mass = family.mass(k);
  for (std::size_t i = 0; i < m; ++i) rule.weights[i] = mass * z[i] * z[i];
  return rule;
}

std::vector<double> eval_orthonormal(const CoefficientFamily& family, std::size_t k,
                                     std::size_t n, double x) {
  std::vector<double> p(n + 1);
  p[0] = 1.0 / std::sqrt(family.mass(k));
  if (n == 0) return p;
  double prev = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    const RecurrencePair cur = family.coeff(k, l);
    const RecurrencePair nxt = family.coeff(k, l + 1);
    const double bl = (l == 0) ? 0.0 : cur.b;
    p[l + 1] = ((x - cur.a) * p[l] - bl * prev) / nxt.b;
    prev = p[l];
  }
  return p;
}

double cd_kernel_diag(const CoefficientFamily& family, std::size_t k, std::size_t n,
                      double x) {
  const std::vector<double> p = eval_orthonormal(family, k, n, x);
  double sum = 0.0;
  for (double v : p) sum += v * v;
  return sum;
}

namespace {

// y = J x on the truncated index range
void tridiag_apply(const JacobiMatrix& J, const std::vector<double>& x,
                   std::vector<double>& y) {
  const std::size_t n = J.size();
  for (std::size_t i = 0; i < n; ++i) {
    double v = J.diag[i] * x[i];
    if (i > 0) v += J.offdiag[i - 1] * x[i - 1];
    if (i + 1 < n) v += J.offdiag[i] * x[i + 1];
    y[i] = v;
  }
}

}  // namespace

std::vector<double> local_moments(const CoefficientFamily& family, std::size_t k,
                                  std::size_t m, std::size_t L) {
  // paths of length <= L from m to m never climb above m + ceil(L/2)
  const std::size_t size = m + (L + 1) / 2 + 1;
  const JacobiMatrix J = jacobi_matrix(family, k, size);
  std::vector<double> v(size, 0.0), w(size);
  v[m] = 1.0;
  std::vector<double> moments(L + 1);
  moments[0] = 1.0;
  for (std::size_t l = 1; l <= L; ++l) {
    tridiag_apply(J, v, w);
    v.swap(w);
    moments[l] = v[m];
  }
  return moments;
}

double local_moment(const CoefficientFamily& family, std::size_t k, std::size_t m,
                    std::size_t l) {
  return local_moments(family, k, m, l)[l];
}

double trace_power(const JacobiMatrix& J, std::size_t l) {
  const std::size_t n = J.size();
  if (l == 0) return static_cast<double>(n);
  if (l == 1) {
    double t = 0.0;
    for (double d : J.diag) t += d;
    return t;
  }
  double tr = 0.0;
  std::vector<double> v(n), w(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::fill(v.begin(), v.end(), 0.0);
    v[m] = 1.0;
    for (std::size_t step = 0; step < l; ++step) {
      tridiag_apply(J, v, w);
      v.swap(w);
    }
    tr += v[m];
  }
  return tr;
}

}  // namespace orthomean
