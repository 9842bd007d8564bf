#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fiedler/fiedler_input.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/main_function.hpp"
#include "fiedler/oracle.hpp"
#include "fiedler/polynomial.hpp"

namespace fiedler {

inline constexpr double kDefaultSpectrumTol = 1e-8;

/// Every intermediate of the cleared block formula
///
///   det(lambda I - A) = (phi_1/g_1) ... (phi_k/g_k) * Phi(lambda),
///
/// where Gamma_i = f_i/g_i and Phi is the determinant of the k x k
/// polynomial matrix with g_i on the diagonal and -rho_ij f_i off it.
struct FiedlerDecomposition {
  std::vector<MainFunction> gammas;  // gammas[i].source_charpoly = phi_i
  RationalMatrix rho;
  Polynomial phi;                    // Phi(lambda)
  Polynomial charpoly;
};

/// Builds the decomposition from already computed main functions. Never
/// divides by Gamma_i, so zero coupling vectors are fine.
FiedlerDecomposition fiedler_from_main_functions(std::vector<MainFunction> gammas, const RationalMatrix& rho);

FiedlerDecomposition fiedler_decompose(const FiedlerInput& input);

/// Exact det(lambda I - A(M, u, rho)); arbitrary (asymmetric) rho and u != v allowed.
Polynomial fiedler_charpoly(const FiedlerInput& input);

struct SpectrumEntry {
  double value = 0;
  std::size_t multiplicity = 0;
  std::size_t component = 0;
};

/// Eigenvalues of a join split into the three classes: block eigenvalues
/// that are not main for the coupling vector (kept with full multiplicity),
/// main block eigenvalues (kept with multiplicity m - 1), and the roots of
/// Phi.
struct SpectrumReport {
  Polynomial charpoly;
  std::vector<SpectrumEntry> inherited;
  std::vector<SpectrumEntry> reduced;
  Polynomial phi;
  std::vector<double> phi_roots;
  std::optional<Verdict> oracle_verdict;
  std::string route;

  std::size_t total_multiplicity() const;
  /// All eigenvalues, repeated by multiplicity, ascending.
  std::vector<double> eigenvalues() const;
};

/// Requires every M_i symmetric, u_i = v_i and rho symmetric; throws
/// PreconditionError otherwise. Main eigenvalues are separated exactly by
/// gcd with g_i before any root is computed.
SpectrumReport fiedler_spectrum(const FiedlerInput& input, double tol = kDefaultSpectrumTol);

/// The H-join universal adjacency as a Fiedler input: blocks
/// U_i + delta w_i I, all-ones coupling vectors, coupling rho_ij alpha + gamma.
/// Adjacency when spec.universal is absent.
FiedlerInput hjoin_universal_input(const JoinSpec& spec);

/// phi_{U(G)} = prod phi_i(l - delta w_i) Gamma_i(l - delta w_i) det(U~), in
/// cleared form. Throws SpecError when subsets are present.
Polynomial hjoin_universal_charpoly(const JoinSpec& spec);

/// Three-class spectrum of U(G) for the H-join.
SpectrumReport hjoin_universal_spectrum(const JoinSpec& spec, double tol = kDefaultSpectrumTol);

/// Regular components: spec(U(G)) = U_i (spec(P_i) minus p_i) together
/// with spec(U~'), p_i = alpha r_i + beta + gamma n_i + delta (r_i + w_i).
/// When `degrees` is given it must match the actual regularity.
/// Throws PreconditionError on a non-regular component.
SpectrumReport hjoin_universal_spectrum_regular(const JoinSpec& spec,
                                                const std::optional<std::vector<std::size_t>>& degrees = std::nullopt,
                                                double tol = kDefaultSpectrumTol);

/// alpha + delta = 0: same shape with p_i = beta + gamma n_i + delta w_i and
/// arbitrary components. Throws PreconditionError when alpha + delta != 0.
SpectrumReport hjoin_universal_spectrum_alpha_delta_zero(const JoinSpec& spec, double tol = kDefaultSpectrumTol);

/// Characteristic polynomial of U(H[G']) for delta = 0:
///   phi^k(l) prod_i (1 - b_i Gamma(l)),  b_i ranging over spec(alpha A(H) + gamma (J - I)),
/// evaluated exactly as (phi/g)^k * sum_j c_j g^j f^(k-j) with c_j the
/// coefficients of det(mu I - alpha A(H) - gamma (J - I)). For the
/// adjacency case (alpha, gamma) = (1, 0) the b_i are the eigenvalues of H.
/// Throws PreconditionError when delta != 0.
Polynomial lex_universal_charpoly(const Graph& host, const Graph& factor,
                                  const UniversalParams& params = UniversalParams::adjacency());

/// det(lambda I - (A(G) - t D(G))) for the H-join at a fixed rational t.
/// Throws PreconditionError when spec.universal is set.
Polynomial generalized_charpoly(const JoinSpec& spec, const Rational& t);

/// Adjacency characteristic polynomial of the H-generalized join, with
/// Gamma_i taken against the characteristic vector of S_i.
Polynomial hgen_join_charpoly(const JoinSpec& spec);

/// Fiedler input for the H-generalized join (adjacency semantics).
FiedlerInput hgen_join_input(const JoinSpec& spec);

SpectrumReport hgen_join_spectrum(const JoinSpec& spec, double tol = kDefaultSpectrumTol);

/// prod phi_{G_i} * det(lambda I - A(H') - diag(Gamma_{G_i})), the k x k
/// determinant taken over Q(lambda) and then cleared.
Polynomial corona_charpoly(const Graph& hp, const std::vector<Graph>& family);

/// The same polynomial through the H-join over H' o K1.
Polynomial corona_charpoly_via_hjoin(const Graph& hp, const std::vector<Graph>& family);

}  // namespace fiedler
