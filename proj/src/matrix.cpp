#include "fiedler/matrix.hpp"

#include <utility>

namespace fiedler {

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (sgn(a(i, l)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum shape mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw ShapeError("matrix-vector shape mismatch");
  RationalVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw ShapeError("dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalMatrix outer(std::span<const Rational> u, std::span<const Rational> v) {
  RationalMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

Rational trace(const RationalMatrix& a) {
  if (!a.square()) throw ShapeError("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

namespace {

using IntMatrix = Matrix<Integer>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.rows();
  IntMatrix c(n, n);
  Integer tmp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const Integer& ail = a(i, l);
      if (sgn(ail) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        mpz_addmul(c(i, j).get_mpz_t(), ail.get_mpz_t(), b(l, j).get_mpz_t());
      }
    }
  return c;
}

}  // namespace

CharpolyAdjugate charpoly_and_adjugate(const RationalMatrix& m) {
  if (!m.square()) throw ShapeError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  CharpolyAdjugate out;
  if (n == 0) {
    out.charpoly = Polynomial::constant(1);
    return out;
  }

  // B = D*M has integer entries; charpoly and adjugate of B are integral.
  Integer scale = 1;
  for (const auto& x : m.data()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = m(i, j).get_num() * (scale / m(i, j).get_den());

  // c[j]: coefficient of mu^j in det(mu I - B).
  // N_k = B N_{k-1} + c[n-k+1] I,  c[n-k] = -tr(B N_k) / k,  adj(mu I - B) = sum_k N_k mu^{n-k}.
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  std::vector<IntMatrix> nk(n + 1);
  IntMatrix bn(n, n);  // B * N_{k-1}
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = bn;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    bn = multiply(b, next);
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += bn(i, i);
    mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -tr;
    nk[k] = std::move(next);
  }

  // det(lambda I - M) = D^{-n} p_B(D lambda); adj(lambda I - M) = D^{-(n-1)} adj(D lambda I - B).
  std::vector<Rational> coeffs(n + 1);
  Integer dpow = 1;  // D^(n-j) for descending j
  for (std::size_t j = n + 1; j-- > 0;) {
    coeffs[j] = Rational(c[j], dpow);
    coeffs[j].canonicalize();
    dpow *= scale;
  }
  out.charpoly = Polynomial(std::move(coeffs));

  out.adjugate.resize(n);
  dpow = 1;  // D^(n-1-j)
  for (std::size_t j = n; j-- > 0;) {
    const IntMatrix& src = nk[n - j];
    RationalMatrix bj(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        bj(r, s) = Rational(src(r, s), dpow);
        bj(r, s).canonicalize();
      }
    out.adjugate[j] = std::move(bj);
    dpow *= scale;
  }
  return out;
}

Polynomial charpoly(const RationalMatrix& m) { return charpoly_and_adjugate(m).charpoly; }

Rational det(const RationalMatrix& m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a(piv, k)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return result;
}

Polynomial poly_matrix_det(const PolynomialMatrix& m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(1);
  PolynomialMatrix a = m;
  bool negate = false;
  Polynomial prev = Polynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      a(i, k) = Polynomial{};
    }
    prev = a(k, k);
  }
  Polynomial d = a(n - 1, n - 1);
  return negate ? -d : d;
}

RationalFunction polymat_det(const RationalFunctionMatrix& m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  PolynomialMatrix cleared(n, n);
  Polynomial row_factors = Polynomial::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial lcm = Polynomial::constant(1);
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial& d = m(i, j).den();
      lcm = exact_div(lcm * d, gcd(lcm, d));
    }
    for (std::size_t j = 0; j < n; ++j) cleared(i, j) = m(i, j).num() * exact_div(lcm, m(i, j).den());
    row_factors *= lcm;
  }
  return ratfun_reduce(poly_matrix_det(cleared), row_factors);
}

}  // namespace fiedler
