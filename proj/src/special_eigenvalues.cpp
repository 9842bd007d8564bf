#include "fiedler/special_eigenvalues.hpp"

#include <algorithm>

#include "fiedler/errors.hpp"
#include "fiedler/main_function.hpp"

namespace fiedler {

std::string to_string(EigenLabel l) {
  switch (l) {
    case EigenLabel::Main: return "main";
    case EigenLabel::EqualsKMinusTau: return "k-tau";
    case EigenLabel::Special: return "special";
  }
  return "unknown";
}

SpecialEigenvalues classify_special_eigenvalues(const Graph& g, const VertexSubset& s, double tol) {
  if (s.parent_size() != g.n()) throw SpecError("subset does not belong to this graph");
  const auto kt = is_k_tau_regular(g, s);
  if (!kt || kt->second == 0) throw PreconditionError("S must be a (k,tau)-regular set with tau > 0");

  SpecialEigenvalues out;
  out.k = kt->first;
  out.tau = kt->second;

  const RationalMatrix a = g.adjacency_matrix();
  const CharpolyAdjugate ca = charpoly_and_adjugate(a);
  const RationalVector one(g.n(), Rational(1));
  const RationalVector chi = s.characteristic_vector();
  const Polynomial g_one = gamma(a, ca, one, one).denominator_g;
  const Polynomial g_chi = gamma(a, ca, chi, chi).denominator_g;

  const Rational k_minus_tau = Rational(static_cast<long>(out.k)) - static_cast<long>(out.tau);
  const Polynomial lin = Polynomial::linear_root(k_minus_tau);

  auto push_roots = [&](const Polynomial& q, std::size_t m, EigenLabel label) {
    if (q.deg() == 0) return;
    for (const auto& r : square_free_roots(q, tol)) out.entries.push_back({r.real() + 0.0, m, label});
  };

  for (auto [q, m] : square_free_decomposition(ca.charpoly)) {
    if (sgn(q.eval(k_minus_tau)) == 0) {
      if (sgn(g_one.eval(k_minus_tau)) == 0) throw Error("k - tau came out as a main eigenvalue");
      out.entries.push_back({k_minus_tau.get_d(), m, EigenLabel::EqualsKMinusTau});
      q = exact_div(q, lin);
    }
    const Polynomial main_part = gcd(q, g_one);
    const Polynomial rest = exact_div(q, main_part);
    if (gcd(main_part, g_chi) != main_part) throw Error("a main eigenvalue is not chi_S-main");
    if (gcd(rest, g_chi).deg() != 0) throw Error("a special eigenvalue is chi_S-main");
    push_roots(main_part, m, EigenLabel::Main);
    push_roots(rest, m, EigenLabel::Special);
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const LabeledEigenvalue& x, const LabeledEigenvalue& y) { return x.value < y.value; });
  return out;
}

}  // namespace fiedler
