#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fiedler/polynomial.hpp"

namespace fiedler {

inline constexpr double kDefaultRootTol = 1e-10;

/// A numeric root together with its exact multiplicity.
struct RootCluster {
  std::complex<double> value;
  std::size_t multiplicity;
};

/// Roots of p grouped by exact multiplicity. Multiplicities come from the
/// square-free decomposition of p, so equal roots are never split or merged
/// numerically. Each square-free factor is solved through the eigenvalues of
/// its companion matrix and then polished by Newton steps with implicit
/// deflation against the other roots. Throws DomainError when p = 0.
std::vector<RootCluster> poly_root_clusters(const Polynomial& p, double tol = kDefaultRootTol);

/// All deg(p) roots, repeated according to multiplicity.
std::vector<std::complex<double>> poly_roots_numeric(const Polynomial& p, double tol = kDefaultRootTol);

/// Real parts of all roots, sorted ascending; throws DomainError when some
/// root has |imaginary part| > imag_tol.
std::vector<double> real_roots_sorted(const Polynomial& p, double imag_tol = 1e-6);

/// Roots of a square-free polynomial (no multiplicity handling).
std::vector<std::complex<double>> square_free_roots(const Polynomial& q, double tol = kDefaultRootTol);

}  // namespace fiedler
