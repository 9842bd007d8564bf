#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fiedler/matrix.hpp"
#include "fiedler/rational_function.hpp"
#include "fiedler/roots.hpp"

namespace fiedler {

/// Gamma_M(u, v; lambda) = v^T (lambda I - M)^{-1} u in lowest terms f/g.
///
/// g is monic and divides det(lambda I - M). When M is symmetric and u = v,
/// the roots of g are exactly the u-main eigenvalues of M and g is
/// square-free.
struct MainFunction {
  RationalFunction gamma;
  std::size_t source_dim = 0;
  Polynomial numerator_f;
  Polynomial denominator_g;
  /// det(lambda I - M) of the source matrix (after any shift).
  Polynomial source_charpoly;
  /// Source symmetric and u = v: pole-based main-eigenvalue claims apply.
  bool normal_case = false;
};

/// Throws ShapeError on dimension mismatch.
MainFunction gamma(const RationalMatrix& m, std::span<const Rational> u, std::span<const Rational> v);

/// Same, reusing an already computed characteristic polynomial and adjugate.
MainFunction gamma(const RationalMatrix& m, const CharpolyAdjugate& ca, std::span<const Rational> u,
                   std::span<const Rational> v);

/// ||u||^2 / (lambda - mu) for an eigenvector u of eigenvalue mu.
/// Throws DomainError unless norm_sq > 0.
MainFunction gamma_eigenvector(const Rational& mu, const Rational& norm_sq);

/// Numeric roots of g, each once. Throws PreconditionError outside the
/// symmetric u = v case; throws Error if g turns out not square-free.
std::vector<double> u_main_poles(const MainFunction& mf, double tol = kDefaultRootTol);

/// lambda -> lambda - c in f, g and the source characteristic polynomial;
/// equals gamma(M + cI, u, v).
MainFunction shifted(const MainFunction& mf, const Rational& c);

}  // namespace fiedler
