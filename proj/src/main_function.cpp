#include "fiedler/main_function.hpp"

#include <algorithm>

namespace fiedler {

namespace {

MainFunction assemble(RationalFunction gamma, std::size_t dim, Polynomial charpoly, bool normal) {
  MainFunction mf;
  mf.numerator_f = gamma.num();
  mf.denominator_g = gamma.den();
  mf.gamma = std::move(gamma);
  mf.source_dim = dim;
  mf.source_charpoly = std::move(charpoly);
  mf.normal_case = normal;
  return mf;
}

}  // namespace

MainFunction gamma(const RationalMatrix& m, const CharpolyAdjugate& ca, std::span<const Rational> u,
                   std::span<const Rational> v) {
  if (!m.square()) throw ShapeError("main function of a non-square matrix");
  const std::size_t n = m.rows();
  if (u.size() != n || v.size() != n) throw ShapeError("main function vectors must match the matrix order");

  // v^T adj(lambda I - M) u, one coefficient per adjugate term.
  std::vector<Rational> num(n);
  for (std::size_t j = 0; j < n; ++j) num[j] = dot(v, ca.adjugate[j] * u);

  const bool normal = m.symmetric() && std::equal(u.begin(), u.end(), v.begin(), v.end());
  return assemble(ratfun_reduce(Polynomial(std::move(num)), ca.charpoly), n, ca.charpoly, normal);
}

MainFunction gamma(const RationalMatrix& m, std::span<const Rational> u, std::span<const Rational> v) {
  if (!m.square()) throw ShapeError("main function of a non-square matrix");
  return gamma(m, charpoly_and_adjugate(m), u, v);
}

MainFunction gamma_eigenvector(const Rational& mu, const Rational& norm_sq) {
  if (sgn(norm_sq) <= 0) throw DomainError("eigenvector shortcut needs ||u||^2 > 0");
  MainFunction mf = assemble(ratfun_reduce(Polynomial::constant(norm_sq), Polynomial::linear_root(mu)), 1,
                             Polynomial::linear_root(mu), true);
  return mf;
}

std::vector<double> u_main_poles(const MainFunction& mf, double tol) {
  if (!mf.normal_case)
    throw PreconditionError("poles are u-main eigenvalues only for a symmetric source with u = v");
  if (!is_square_free(mf.denominator_g)) throw Error("main function has a repeated pole for a symmetric source");
  std::vector<double> out;
  for (const auto& r : square_free_roots(mf.denominator_g, tol)) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

MainFunction shifted(const MainFunction& mf, const Rational& c) {
  return assemble(ratfun_shift(mf.gamma, c), mf.source_dim, poly_shift(mf.source_charpoly, c), mf.normal_case);
}

}  // namespace fiedler
