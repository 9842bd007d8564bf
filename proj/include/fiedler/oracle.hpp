#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fiedler/fiedler_input.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/polynomial.hpp"

namespace fiedler {

inline constexpr std::size_t kDefaultOracleCap = 128;

/// Reads SPECTRA_ORACLE_CAP, falling back to kDefaultOracleCap.
std::size_t oracle_cap_from_env();

enum class Provenance {
  FiedlerBlocks,    // M_i and rho_ij u_i v_j^T
  AdjacencyJoin,    // A_i and rho_ij 1 1^T
  UniversalJoin,    // U_i + delta w_i I and (rho_ij alpha + gamma) 1 1^T
  GeneralizedJoin,  // A_i and rho_ij chi_i chi_j^T
  Corona,           // A(H') and hub-to-block all-ones rows
};

std::string to_string(Provenance p);

struct AssembledMatrix {
  RationalMatrix matrix;
  std::vector<std::size_t> block_offsets;
  Provenance provenance = Provenance::FiedlerBlocks;
};

/// Dense block matrix of a Fiedler input.
AssembledMatrix assemble(const FiedlerInput& input);

/// Universal adjacency of the H-join written block by block (adjacency when
/// spec.universal is absent). Follows spec.rho(), so a rho override shows up
/// here but not in universal_matrix(h_join(spec)).
AssembledMatrix assemble_universal_join(const JoinSpec& spec);

/// Adjacency of the H-generalized join written block by block.
AssembledMatrix assemble_generalized_join(const JoinSpec& spec);

/// Adjacency of the generalized corona: [[A(H'), B], [B^T, diag A(G_i)]].
AssembledMatrix assemble_corona(const Graph& hp, const std::vector<Graph>& family);

/// Exact det(lambda I - A) by Faddeev-LeVerrier. Throws PreconditionError
/// when the dimension exceeds `cap`.
Polynomial oracle_charpoly(const AssembledMatrix& a, std::size_t cap = kDefaultOracleCap);

/// Ascending eigenvalues of a symmetric matrix from the tridiagonal QL
/// solver; every eigenpair is residual-checked against tol * ||A||.
/// Throws PreconditionError when the matrix is not symmetric.
std::vector<double> oracle_spectrum(const AssembledMatrix& a, double tol = 1e-8);
std::vector<double> oracle_spectrum(const RationalMatrix& m, double tol = 1e-8);

struct Verdict {
  bool pass = false;
  /// Lowest power whose coefficients differ.
  std::optional<std::size_t> first_difference;
  std::string detail;
};

/// Exact coefficient-wise comparison.
Verdict compare(const Polynomial& formula, const Polynomial& oracle);

/// Multiset comparison of two sorted real spectra at absolute tolerance.
Verdict compare_spectra(const std::vector<double>& a, const std::vector<double>& b, double tol);

}  // namespace fiedler
