#include "fiedler/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "fiedler/errors.hpp"
#include "fiedler/symmetric_eigen.hpp"

namespace fiedler {

std::size_t oracle_cap_from_env() {
  if (const char* s = std::getenv("SPECTRA_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return kDefaultOracleCap;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::FiedlerBlocks: return "fiedler-blocks";
    case Provenance::AdjacencyJoin: return "adjacency-join";
    case Provenance::UniversalJoin: return "universal-join";
    case Provenance::GeneralizedJoin: return "generalized-join";
    case Provenance::Corona: return "corona";
  }
  return "unknown";
}

AssembledMatrix assemble(const FiedlerInput& input) {
  input.validate();
  AssembledMatrix out;
  out.provenance = Provenance::FiedlerBlocks;
  std::size_t acc = 0;
  for (const auto& b : input.blocks) {
    out.block_offsets.push_back(acc);
    acc += b.m.rows();
  }
  out.matrix = RationalMatrix(acc, acc);
  for (std::size_t i = 0; i < input.k(); ++i) {
    const auto& bi = input.blocks[i];
    const std::size_t oi = out.block_offsets[i];
    for (std::size_t j = 0; j < input.k(); ++j) {
      const std::size_t oj = out.block_offsets[j];
      if (i == j) {
        for (std::size_t r = 0; r < bi.m.rows(); ++r)
          for (std::size_t c = 0; c < bi.m.cols(); ++c) out.matrix(oi + r, oj + c) = bi.m(r, c);
        continue;
      }
      const Rational& rho = input.rho(i, j);
      if (sgn(rho) == 0) continue;
      const auto& vj = input.blocks[j].v;
      for (std::size_t r = 0; r < bi.u.size(); ++r)
        for (std::size_t c = 0; c < vj.size(); ++c) out.matrix(oi + r, oj + c) = rho * bi.u[r] * vj[c];
    }
  }
  return out;
}

AssembledMatrix assemble_universal_join(const JoinSpec& spec) {
  spec.validate();
  if (spec.subsets) throw SpecError("universal join assembly takes no vertex subsets");
  const UniversalParams p = spec.universal.value_or(UniversalParams::adjacency());
  p.validate(spec.allow_zero_alpha);
  const auto w = join_weights(spec);
  const RationalMatrix rho = spec.rho();

  AssembledMatrix out;
  out.provenance = spec.universal ? Provenance::UniversalJoin : Provenance::AdjacencyJoin;
  out.block_offsets = spec.offsets();
  const std::size_t n = spec.total_size();
  out.matrix = RationalMatrix(n, n);
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const std::size_t oi = out.block_offsets[i];
    const RationalMatrix ui = universal_matrix(spec.components[i], p, spec.allow_zero_alpha);
    const Rational shift = p.delta * static_cast<unsigned long>(w[i]);
    for (std::size_t r = 0; r < ui.rows(); ++r) {
      for (std::size_t c = 0; c < ui.cols(); ++c) out.matrix(oi + r, oi + c) = ui(r, c);
      out.matrix(oi + r, oi + r) += shift;
    }
    for (std::size_t j = 0; j < spec.k(); ++j) {
      if (i == j) continue;
      const Rational coupling = rho(i, j) * p.alpha + p.gamma;
      const std::size_t oj = out.block_offsets[j];
      for (std::size_t r = 0; r < spec.components[i].n(); ++r)
        for (std::size_t c = 0; c < spec.components[j].n(); ++c) out.matrix(oi + r, oj + c) = coupling;
    }
  }
  return out;
}

AssembledMatrix assemble_generalized_join(const JoinSpec& spec) {
  spec.validate();
  if (!spec.subsets) throw SpecError("generalized join assembly requires vertex subsets");
  const RationalMatrix rho = spec.rho();
  AssembledMatrix out;
  out.provenance = Provenance::GeneralizedJoin;
  out.block_offsets = spec.offsets();
  const std::size_t n = spec.total_size();
  out.matrix = RationalMatrix(n, n);
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const std::size_t oi = out.block_offsets[i];
    const RationalMatrix ai = spec.components[i].adjacency_matrix();
    for (std::size_t r = 0; r < ai.rows(); ++r)
      for (std::size_t c = 0; c < ai.cols(); ++c) out.matrix(oi + r, oi + c) = ai(r, c);
    for (std::size_t j = 0; j < spec.k(); ++j) {
      if (i == j || sgn(rho(i, j)) == 0) continue;
      const std::size_t oj = out.block_offsets[j];
      for (std::size_t r : (*spec.subsets)[i].members())
        for (std::size_t c : (*spec.subsets)[j].members()) out.matrix(oi + r, oj + c) = rho(i, j);
    }
  }
  return out;
}

AssembledMatrix assemble_corona(const Graph& hp, const std::vector<Graph>& family) {
  if (family.size() != hp.n()) throw SpecError("corona needs one graph per vertex of H'");
  const std::size_t k = hp.n();
  AssembledMatrix out;
  out.provenance = Provenance::Corona;
  std::size_t n = k;
  out.block_offsets.push_back(0);
  for (const auto& g : family) {
    out.block_offsets.push_back(n);
    n += g.n();
  }
  out.matrix = RationalMatrix(n, n);
  const RationalMatrix ah = hp.adjacency_matrix();
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) out.matrix(r, c) = ah(r, c);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t off = out.block_offsets[i + 1];
    const RationalMatrix ai = family[i].adjacency_matrix();
    for (std::size_t r = 0; r < ai.rows(); ++r) {
      for (std::size_t c = 0; c < ai.cols(); ++c) out.matrix(off + r, off + c) = ai(r, c);
      out.matrix(i, off + r) = 1;
      out.matrix(off + r, i) = 1;
    }
  }
  return out;
}

Polynomial oracle_charpoly(const AssembledMatrix& a, std::size_t cap) {
  if (a.matrix.rows() > cap)
    throw PreconditionError("oracle dimension " + std::to_string(a.matrix.rows()) + " exceeds the cap " +
                            std::to_string(cap) + " (SPECTRA_ORACLE_CAP)");
  return charpoly(a.matrix);
}

std::vector<double> oracle_spectrum(const RationalMatrix& m, double tol) {
  if (!m.symmetric()) throw PreconditionError("numeric oracle spectrum needs a symmetric matrix");
  const std::size_t n = m.rows();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_d();
  const SymmetricEigen eig = symmetric_eigen(a, n);

  double norm = 0.0;
  for (double x : a) norm = std::max(norm, std::abs(x));
  norm = std::max(norm * static_cast<double>(n), 1.0);
  if (max_residual(a, n, eig) > tol * norm) throw Error("symmetric eigensolver residual check failed");
  return eig.values;
}

std::vector<double> oracle_spectrum(const AssembledMatrix& a, double tol) { return oracle_spectrum(a.matrix, tol); }

Verdict compare(const Polynomial& formula, const Polynomial& oracle) {
  Verdict v;
  const std::size_t len = std::max(formula.coeffs().size(), oracle.coeffs().size());
  for (std::size_t j = 0; j < len; ++j) {
    if (formula.coeff(j) != oracle.coeff(j)) {
      v.first_difference = j;
      v.detail = "coefficient of l^" + std::to_string(j) + ": formula " + to_string(formula.coeff(j)) + ", oracle " +
                 to_string(oracle.coeff(j));
      return v;
    }
  }
  v.pass = true;
  v.detail = "exact match";
  return v;
}

Verdict compare_spectra(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  Verdict v;
  if (a.size() != b.size()) {
    v.detail = "spectrum sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return v;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(std::abs(a[i] - b[i]) <= tol)) {
      v.first_difference = i;
      v.detail = "eigenvalue #" + std::to_string(i) + ": " + std::to_string(a[i]) + " vs " + std::to_string(b[i]);
      return v;
    }
  }
  v.pass = true;
  v.detail = "spectra agree within tolerance";
  return v;
}

}  // namespace fiedler
