#pragma once

#include <initializer_list>
#include <vector>

#include "fiedler/matrix.hpp"
#include "fiedler/polynomial.hpp"
#include "fiedler/random_inputs.hpp"

namespace testing {

using namespace fiedler;
using namespace fiedler::random;

inline Polynomial poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long x : ascending) c.emplace_back(x);
  return Polynomial(std::move(c));
}

/// det(rI - M) by Gaussian elimination at a rational point.
inline Rational det_shifted(const RationalMatrix& m, const Rational& r) {
  RationalMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = (i == j ? r : Rational(0)) - m(i, j);
  return det(a);
}

}  // namespace testing
