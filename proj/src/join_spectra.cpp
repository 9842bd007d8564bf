#include "fiedler/join_spectra.hpp"

#include <algorithm>
#include <cmath>

#include "fiedler/errors.hpp"
#include "fiedler/roots.hpp"
#include "fiedler/symmetric_eigen.hpp"

namespace fiedler {

namespace {

RationalVector ones(std::size_t n) { return RationalVector(n, Rational(1)); }

Polynomial lambda() { return Polynomial{Rational(0), Rational(1)}; }

RationalMatrix coupling_matrix(const JoinSpec& spec, const UniversalParams& p) {
  const RationalMatrix rho = spec.rho();
  RationalMatrix out(spec.k(), spec.k());
  for (std::size_t i = 0; i < spec.k(); ++i)
    for (std::size_t j = 0; j < spec.k(); ++j)
      if (i != j) out(i, j) = rho(i, j) * p.alpha + p.gamma;
  return out;
}

std::vector<double> real_parts_checked(const Polynomial& p, double tol) {
  std::vector<double> out;
  if (p.deg() == 0) return out;
  for (const auto& r : poly_roots_numeric(p, std::min(tol, kDefaultRootTol))) {
    if (std::abs(r.imag()) > 1e-6 * std::max(1.0, std::abs(r.real())))
      throw Error("expected a real spectrum but found a complex root");
    out.push_back(r.real() + 0.0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_universal_join(const JoinSpec& spec) {
  spec.validate();
  if (spec.subsets) throw SpecError("H-join universal route takes no vertex subsets; use the generalized join route");
}

UniversalParams params_of(const JoinSpec& spec) {
  const UniversalParams p = spec.universal.value_or(UniversalParams::adjacency());
  p.validate(spec.allow_zero_alpha);
  return p;
}

std::vector<double> dense_eigenvalues(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_d();
  return symmetric_eigen(std::move(a), n).values;
}

// Shared tail of both corollary routes once the p_i are known.
SpectrumReport corollary_spectrum(const JoinSpec& spec, const UniversalParams& p, const std::vector<Rational>& pvals,
                                  std::string route) {
  const std::size_t k = spec.k();
  const auto w = join_weights(spec);
  const RationalMatrix rho_hat = coupling_matrix(spec, p);

  SpectrumReport rep;
  rep.route = std::move(route);
  rep.charpoly = Polynomial::constant(1);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t ni = spec.components[i].n();
    if (ni == 0) throw PreconditionError("corollary routes need nonempty components");
    RationalMatrix pi = universal_matrix(spec.components[i], p, spec.allow_zero_alpha);
    for (std::size_t r = 0; r < ni; ++r) pi(r, r) += p.delta * static_cast<unsigned long>(w[i]);

    // The all-ones vector must be an eigenvector of P_i for p_i.
    for (const auto& x : pi * ones(ni))
      if (x != pvals[i]) throw Error("all-ones vector is not an eigenvector of P_i for the corollary value p_i");

    std::vector<double> eig = dense_eigenvalues(pi);
    const double target = pvals[i].get_d();
    auto drop = std::min_element(eig.begin(), eig.end(),
                                 [&](double a, double b) { return std::abs(a - target) < std::abs(b - target); });
    eig.erase(drop);
    for (double x : eig) rep.inherited.push_back({x, 1, i});
    rep.charpoly *= exact_div(charpoly(pi), Polynomial::linear_root(pvals[i]));
  }

  // n_1 ... n_k det(U~) cleared: diag (l - p_i), off-diagonal -n_i rho^_ij.
  PolynomialMatrix pm(k, k);
  std::vector<double> sym(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const unsigned long ni = spec.components[i].n();
      const unsigned long nj = spec.components[j].n();
      if (i == j) {
        pm(i, i) = Polynomial::linear_root(pvals[i]);
        sym[i * k + i] = pvals[i].get_d();
      } else {
        pm(i, j) = Polynomial::constant(-rho_hat(i, j) * ni);
        sym[i * k + j] = std::sqrt(static_cast<double>(ni) * static_cast<double>(nj)) * rho_hat(i, j).get_d();
      }
    }
  rep.phi = poly_matrix_det(pm);
  rep.charpoly *= rep.phi;
  rep.phi_roots = symmetric_eigen(std::move(sym), k).values;
  return rep;
}

}  // namespace

std::size_t SpectrumReport::total_multiplicity() const {
  std::size_t t = phi_roots.size();
  for (const auto& e : inherited) t += e.multiplicity;
  for (const auto& e : reduced) t += e.multiplicity;
  return t;
}

std::vector<double> SpectrumReport::eigenvalues() const {
  std::vector<double> out = phi_roots;
  for (const auto* group : {&inherited, &reduced})
    for (const auto& e : *group) out.insert(out.end(), e.multiplicity, e.value);
  std::sort(out.begin(), out.end());
  return out;
}

FiedlerDecomposition fiedler_from_main_functions(std::vector<MainFunction> gammas, const RationalMatrix& rho) {
  const std::size_t k = gammas.size();
  if (rho.rows() != k || rho.cols() != k) throw ShapeError("rho must be k x k");

  PolynomialMatrix cleared(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      cleared(i, j) = i == j ? gammas[i].denominator_g : gammas[i].numerator_f * (-rho(i, j));

  FiedlerDecomposition out;
  out.phi = poly_matrix_det(cleared);
  out.charpoly = out.phi;
  for (const auto& mf : gammas) out.charpoly *= exact_div(mf.source_charpoly, mf.denominator_g);
  out.gammas = std::move(gammas);
  out.rho = rho;
  return out;
}

FiedlerDecomposition fiedler_decompose(const FiedlerInput& input) {
  input.validate();
  std::vector<MainFunction> gammas;
  gammas.reserve(input.k());
  for (const auto& b : input.blocks) gammas.push_back(gamma(b.m, b.u, b.v));
  return fiedler_from_main_functions(std::move(gammas), input.rho);
}

Polynomial fiedler_charpoly(const FiedlerInput& input) { return fiedler_decompose(input).charpoly; }

SpectrumReport fiedler_spectrum(const FiedlerInput& input, double tol) {
  input.validate();
  for (std::size_t i = 0; i < input.k(); ++i) {
    const auto& b = input.blocks[i];
    if (!b.m.symmetric()) throw PreconditionError("block " + std::to_string(i) + " is not symmetric");
    if (b.u != b.v) throw PreconditionError("block " + std::to_string(i) + " has u != v");
  }
  if (!input.rho.symmetric()) throw PreconditionError("spectrum classification needs a symmetric rho");

  const FiedlerDecomposition dec = fiedler_decompose(input);
  SpectrumReport rep;
  rep.route = "fiedler";
  rep.charpoly = dec.charpoly;
  rep.phi = dec.phi;

  for (std::size_t i = 0; i < input.k(); ++i) {
    const MainFunction& mf = dec.gammas[i];
    if (mf.source_dim == 0) continue;
    for (const auto& [q, m] : square_free_decomposition(mf.source_charpoly)) {
      const Polynomial main_part = gcd(q, mf.denominator_g);
      const Polynomial other = exact_div(q, main_part);
      if (m > 1)
        for (double x : real_parts_checked(main_part, tol)) rep.reduced.push_back({x, m - 1, i});
      for (double x : real_parts_checked(other, tol)) rep.inherited.push_back({x, m, i});
    }
  }
  rep.phi_roots = real_parts_checked(rep.phi, tol);
  return rep;
}

FiedlerInput hjoin_universal_input(const JoinSpec& spec) {
  require_universal_join(spec);
  const UniversalParams p = params_of(spec);
  const auto w = join_weights(spec);

  FiedlerInput in;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    RationalMatrix pi = universal_matrix(spec.components[i], p, spec.allow_zero_alpha);
    for (std::size_t r = 0; r < pi.rows(); ++r) pi(r, r) += p.delta * static_cast<unsigned long>(w[i]);
    const std::size_t ni = spec.components[i].n();
    in.blocks.push_back({std::move(pi), ones(ni), ones(ni)});
  }
  in.rho = coupling_matrix(spec, p);
  return in;
}

Polynomial hjoin_universal_charpoly(const JoinSpec& spec) {
  require_universal_join(spec);
  const UniversalParams p = params_of(spec);
  const auto w = join_weights(spec);

  // phi_i(l - delta w_i) and Gamma_i(l - delta w_i) from the unshifted U_i.
  std::vector<MainFunction> gammas;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const RationalMatrix ui = universal_matrix(spec.components[i], p, spec.allow_zero_alpha);
    const RationalVector one = ones(ui.rows());
    gammas.push_back(shifted(gamma(ui, one, one), p.delta * static_cast<unsigned long>(w[i])));
  }
  return fiedler_from_main_functions(std::move(gammas), coupling_matrix(spec, p)).charpoly;
}

SpectrumReport hjoin_universal_spectrum(const JoinSpec& spec, double tol) {
  SpectrumReport rep = fiedler_spectrum(hjoin_universal_input(spec), tol);
  rep.route = spec.universal ? "universal-hjoin" : "hjoin";
  return rep;
}

SpectrumReport hjoin_universal_spectrum_regular(const JoinSpec& spec,
                                                const std::optional<std::vector<std::size_t>>& degrees,
                                                double tol) {
  (void)tol;
  require_universal_join(spec);
  const UniversalParams p = params_of(spec);
  const auto w = join_weights(spec);
  if (degrees && degrees->size() != spec.k()) throw ShapeError("one degree per component is required");

  std::vector<Rational> pvals;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const auto r = spec.components[i].regularity();
    if (!r) throw PreconditionError("component " + std::to_string(i) + " is not regular");
    if (degrees && (*degrees)[i] != *r)
      throw PreconditionError("component " + std::to_string(i) + " is " + std::to_string(*r) + "-regular, not " +
                              std::to_string((*degrees)[i]) + "-regular");
    const unsigned long ri = *r;
    const unsigned long ni = spec.components[i].n();
    pvals.push_back(p.alpha * ri + p.beta + p.gamma * ni + p.delta * (ri + w[i]));
  }
  return corollary_spectrum(spec, p, pvals, "regular-corollary");
}

SpectrumReport hjoin_universal_spectrum_alpha_delta_zero(const JoinSpec& spec, double tol) {
  (void)tol;
  require_universal_join(spec);
  const UniversalParams p = params_of(spec);
  if (sgn(p.alpha + p.delta) != 0) throw PreconditionError("this route needs alpha + delta = 0");
  const auto w = join_weights(spec);

  std::vector<Rational> pvals;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const unsigned long ni = spec.components[i].n();
    pvals.push_back(p.beta + p.gamma * ni + p.delta * static_cast<unsigned long>(w[i]));
  }
  return corollary_spectrum(spec, p, pvals, "alpha-delta-zero-corollary");
}

Polynomial lex_universal_charpoly(const Graph& host, const Graph& factor, const UniversalParams& params) {
  params.validate();
  if (sgn(params.delta) != 0) throw PreconditionError("the lexicographic formula needs delta = 0");
  const std::size_t k = host.n();

  const RationalMatrix u = universal_matrix(factor, params);
  const RationalVector one = ones(u.rows());
  const MainFunction mf = gamma(u, one, one);

  // Cross coupling between copies: alpha on host edges plus gamma everywhere off the diagonal.
  RationalMatrix b = params.alpha * host.adjacency_matrix();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) b(i, j) += params.gamma;
  const Polynomial cb = charpoly(b);

  // prod_i (g - b_i f) = sum_j c_j g^j f^(k-j), i.e. the resultant of
  // det(mu I - B) and g - mu f in mu, without leaving Q[lambda].
  const Polynomial& f = mf.numerator_f;
  const Polynomial& g = mf.denominator_g;
  Polynomial acc;
  Polynomial gpow = Polynomial::constant(1);
  for (std::size_t j = 0; j <= k; ++j) {
    acc += cb.coeff(j) * (gpow * pow(f, k - j));
    gpow *= g;
  }
  return pow(exact_div(mf.source_charpoly, g), k) * acc;
}

Polynomial generalized_charpoly(const JoinSpec& spec, const Rational& t) {
  if (spec.universal) throw PreconditionError("the generalized characteristic polynomial fixes (1,0,0,-t) itself");
  JoinSpec s = spec;
  s.universal = UniversalParams{1, 0, 0, -t};
  return hjoin_universal_charpoly(s);
}

FiedlerInput hgen_join_input(const JoinSpec& spec) {
  spec.validate();
  if (!spec.subsets) throw SpecError("the generalized join route requires vertex subsets");
  if (spec.universal && !(*spec.universal == UniversalParams::adjacency()))
    throw PreconditionError("the generalized join formula is stated for the adjacency matrix only");
  FiedlerInput in;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    RationalVector chi = (*spec.subsets)[i].characteristic_vector();
    in.blocks.push_back({spec.components[i].adjacency_matrix(), chi, chi});
  }
  in.rho = spec.rho();
  return in;
}

Polynomial hgen_join_charpoly(const JoinSpec& spec) { return fiedler_charpoly(hgen_join_input(spec)); }

SpectrumReport hgen_join_spectrum(const JoinSpec& spec, double tol) {
  SpectrumReport rep = fiedler_spectrum(hgen_join_input(spec), tol);
  rep.route = "generalized-join";
  return rep;
}

Polynomial corona_charpoly(const Graph& hp, const std::vector<Graph>& family) {
  if (family.size() != hp.n())
    throw SpecError("corona needs one graph per vertex of H' (" + std::to_string(hp.n()) + "), got " +
                    std::to_string(family.size()));
  const std::size_t k = hp.n();
  const RationalMatrix ah = hp.adjacency_matrix();

  RationalFunctionMatrix m(k, k);
  RationalFunction phis(1);
  for (std::size_t i = 0; i < k; ++i) {
    const RationalMatrix ai = family[i].adjacency_matrix();
    const RationalVector one = ones(ai.rows());
    const MainFunction mf = gamma(ai, one, one);
    phis *= RationalFunction(mf.source_charpoly);
    m(i, i) = RationalFunction(lambda()) - mf.gamma;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) m(i, j) = RationalFunction(-ah(i, j));
  }
  const RationalFunction result = polymat_det(m) * phis;
  if (!result.is_polynomial()) throw Error("corona determinant did not clear to a polynomial");
  return result.num();
}

Polynomial corona_charpoly_via_hjoin(const Graph& hp, const std::vector<Graph>& family) {
  return hjoin_universal_charpoly(corona_as_hjoin(hp, family).spec);
}

}  // namespace fiedler
