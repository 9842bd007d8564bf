#pragma once

#include <cstddef>
#include <vector>

#include "fiedler/matrix.hpp"

namespace fiedler {

/// One diagonal block M_i with its coupling vectors u_i (column side) and
/// v_i (row side).
struct FiedlerBlock {
  RationalMatrix m;
  RationalVector u;
  RationalVector v;
};

/// Block matrix with M_i on the diagonal and rho_ij * u_i v_j^T off it.
/// rho is k x k with zero diagonal and need not be symmetric.
struct FiedlerInput {
  std::vector<FiedlerBlock> blocks;
  RationalMatrix rho;

  std::size_t k() const noexcept { return blocks.size(); }
  std::vector<std::size_t> sizes() const;
  std::size_t total_size() const;

  /// Throws ShapeError on any dimension mismatch or nonzero rho diagonal.
  void validate() const;
};

}  // namespace fiedler
