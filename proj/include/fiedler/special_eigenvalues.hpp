#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/roots.hpp"

namespace fiedler {

enum class EigenLabel {
  Main,             // eigenspace not orthogonal to the all-ones vector
  EqualsKMinusTau,  // not main because it equals k - tau
  Special,          // not main and different from k - tau
};

std::string to_string(EigenLabel l);

struct LabeledEigenvalue {
  double value = 0;
  std::size_t multiplicity = 0;
  EigenLabel label = EigenLabel::Main;
};

struct SpecialEigenvalues {
  std::size_t k = 0;
  std::size_t tau = 0;
  /// Ascending by value.
  std::vector<LabeledEigenvalue> entries;
};

/// Labels every eigenvalue of A(G) for a (k, tau)-regular set S with tau > 0.
/// Main eigenvalues come from the poles of Gamma_A(1), and the partition is
/// checked exactly against the poles of Gamma_A(chi_S): main eigenvalues are
/// chi_S-main, special ones are not. Throws PreconditionError unless S is
/// (k, tau)-regular with tau > 0.
SpecialEigenvalues classify_special_eigenvalues(const Graph& g, const VertexSubset& s,
                                                double tol = kDefaultRootTol);

}  // namespace fiedler
