#include "fiedler/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fiedler/errors.hpp"

namespace fiedler {

namespace {

struct Work {
  std::size_t n;
  std::vector<double> v;  // row-major
  std::vector<double> d;
  std::vector<double> e;

  double& V(std::size_t i, std::size_t j) { return v[i * n + j]; }
};

// Householder reduction to tridiagonal form, accumulating the transform in V.
void tred2(Work& w) {
  const std::size_t n = w.n;
  auto& d = w.d;
  auto& e = w.e;
  for (std::size_t j = 0; j < n; ++j) d[j] = w.V(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = w.V(i - 1, j);
        w.V(i, j) = 0.0;
        w.V(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        w.V(j, i) = f;
        g = e[j] + w.V(j, j) * f;
        for (std::size_t k = j + 1; k < i; ++k) {
          g += w.V(k, j) * d[k];
          e[k] += w.V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k < i; ++k) w.V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = w.V(i - 1, j);
        w.V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    w.V(n - 1, i) = w.V(i, i);
    w.V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = w.V(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += w.V(k, i + 1) * w.V(k, j);
        for (std::size_t k = 0; k <= i; ++k) w.V(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) w.V(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = w.V(n - 1, j);
    w.V(n - 1, j) = 0.0;
  }
  w.V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e).
void tql2(Work& w) {
  const std::size_t n = w.n;
  auto& d = w.d;
  auto& e = w.e;
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > 60) throw Error("symmetric QL iteration did not converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (std::size_t k = 0; k < n; ++k) {
            h = w.V(k, i + 1);
            w.V(k, i + 1) = s * w.V(k, i) + c * h;
            w.V(k, i) = c * w.V(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

SymmetricEigen symmetric_eigen(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw ShapeError("symmetric_eigen: data length does not match n*n");
  SymmetricEigen out;
  if (n == 0) return out;
  if (n == 1) {
    out.values = {a[0]};
    out.vectors = {1.0};
    return out;
  }
  Work w{n, std::move(a), std::vector<double>(n), std::vector<double>(n)};
  tred2(w);
  tql2(w);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return w.d[x] < w.d[y]; });
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = w.d[order[j]];
    for (std::size_t k = 0; k < n; ++k) out.vectors[k * n + j] = w.v[k * n + order[j]];
  }
  return out;
}

double max_residual(const std::vector<double>& a, std::size_t n, const SymmetricEigen& eig) {
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = -eig.values[j] * eig.vectors[i * n + j];
      for (std::size_t k = 0; k < n; ++k) r += a[i * n + k] * eig.vectors[k * n + j];
      norm2 += r * r;
    }
    worst = std::max(worst, std::sqrt(norm2));
  }
  return worst;
}

}  // namespace fiedler
