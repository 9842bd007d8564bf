#include "fiedler/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "fiedler/errors.hpp"

namespace fiedler {

namespace {

using cld = std::complex<long double>;

std::vector<std::complex<double>> companion_eigenvalues(const Polynomial& monic_q) {
  const std::size_t d = monic_q.deg();
  const auto& a = monic_q.coeffs();

  // Rescale lambda = s*x so the root moduli are near one; s is a power of two.
  double bound = 0;
  for (std::size_t j = 0; j < d; ++j) {
    const double c = std::abs(a[j].get_d());
    if (c > 0) bound = std::max(bound, std::pow(c, 1.0 / static_cast<double>(d - j)));
  }
  const double s = bound > 0 ? std::exp2(std::round(std::log2(bound))) : 1.0;

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t j = 0; j < d; ++j)
    comp(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(d - 1)) =
        -a[j].get_d() / std::pow(s, static_cast<double>(d - j));

  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw Error("companion eigenvalue iteration did not converge");
  std::vector<std::complex<double>> out;
  out.reserve(d);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i] * s);
  return out;
}

// Newton with implicit deflation (Aberth): keeps simultaneous iterates from
// collapsing onto the same root.
void polish(const Polynomial& q, std::vector<cld>& z, double tol) {
  const Polynomial dq = q.derivative();
  const std::size_t d = z.size();
  for (int iter = 0; iter < 100; ++iter) {
    long double max_step = 0;
    for (std::size_t i = 0; i < d; ++i) {
      const cld f = q.eval(z[i]);
      if (f == cld(0)) continue;
      const cld df = dq.eval(z[i]);
      if (df == cld(0)) continue;
      const cld ratio = f / df;
      cld sum = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i && z[i] != z[j]) sum += cld(1) / (z[i] - z[j]);
      const cld step = ratio / (cld(1) - ratio * sum);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max<long double>(1, std::abs(z[i])));
    }
    if (max_step < tol * 1e-6) break;
  }
}

}  // namespace

std::vector<std::complex<double>> square_free_roots(const Polynomial& q, double tol) {
  if (q.is_zero()) throw DomainError("roots of the zero polynomial");
  if (q.deg() == 0) return {};
  const Polynomial m = q.monic();
  if (m.deg() == 1) return {std::complex<double>(-m.coeff(0).get_d(), 0.0)};

  std::vector<cld> z;
  for (auto r : companion_eigenvalues(m)) z.emplace_back(r.real(), r.imag());
  polish(m, z, tol);

  std::vector<std::complex<double>> out;
  out.reserve(z.size());
  for (const auto& r : z) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));

  // Conjugate noise on numerically real roots.
  for (auto& r : out)
    if (std::abs(r.imag()) <= tol * std::max(1.0, std::abs(r.real()))) r = {r.real(), 0.0};
  return out;
}

std::vector<RootCluster> poly_root_clusters(const Polynomial& p, double tol) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<RootCluster> out;
  for (const auto& f : square_free_decomposition(p))
    for (const auto& r : square_free_roots(f.factor, tol)) out.push_back({r, f.multiplicity});
  return out;
}

std::vector<std::complex<double>> poly_roots_numeric(const Polynomial& p, double tol) {
  std::vector<std::complex<double>> out;
  for (const auto& c : poly_root_clusters(p, tol))
    for (std::size_t k = 0; k < c.multiplicity; ++k) out.push_back(c.value);
  return out;
}

std::vector<double> real_roots_sorted(const Polynomial& p, double imag_tol) {
  std::vector<double> out;
  for (const auto& r : poly_roots_numeric(p)) {
    if (std::abs(r.imag()) > imag_tol * std::max(1.0, std::abs(r.real())))
      throw DomainError("polynomial has a non-real root");
    out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fiedler
