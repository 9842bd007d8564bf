#include "fiedler/fiedler_input.hpp"

#include <string>

namespace fiedler {

std::vector<std::size_t> FiedlerInput::sizes() const {
  std::vector<std::size_t> n;
  for (const auto& b : blocks) n.push_back(b.m.rows());
  return n;
}

std::size_t FiedlerInput::total_size() const {
  std::size_t t = 0;
  for (const auto& b : blocks) t += b.m.rows();
  return t;
}

void FiedlerInput::validate() const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (!b.m.square()) throw ShapeError("block " + std::to_string(i) + " is not square");
    if (b.u.size() != b.m.rows() || b.v.size() != b.m.rows())
      throw ShapeError("block " + std::to_string(i) + ": coupling vectors must match the block order");
  }
  if (rho.rows() != k() || rho.cols() != k()) throw ShapeError("rho must be k x k");
  for (std::size_t i = 0; i < k(); ++i)
    if (sgn(rho(i, i)) != 0) throw ShapeError("rho must have a zero diagonal");
}

}  // namespace fiedler
