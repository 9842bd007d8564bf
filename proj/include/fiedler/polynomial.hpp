#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fiedler/rational.hpp"

namespace fiedler {

/// Degree of a polynomial; the zero polynomial has degree minus infinity,
/// represented by an empty optional.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over Q in the variable lambda.
///
/// coeffs()[j] is the coefficient of lambda^j. The highest stored
/// coefficient is always nonzero; the zero polynomial stores nothing.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(const Rational& c) : Polynomial(std::vector<Rational>{c}) {}
  explicit Polynomial(int c) : Polynomial(Rational(c)) {}

  static Polynomial constant(const Rational& c);
  /// The monomial c * lambda^power.
  static Polynomial monomial(const Rational& c, std::size_t power);
  /// lambda - root
  static Polynomial linear_root(const Rational& root);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Degree degree() const noexcept;
  /// Degree of a nonzero polynomial; throws DomainError for zero.
  std::size_t deg() const;
  /// Coefficient of lambda^j, zero past the end.
  Rational coeff(std::size_t j) const;
  const Rational& leading() const;
  bool is_monic() const noexcept;

  Polynomial monic() const;
  Polynomial derivative() const;

  Rational eval(const Rational& x) const;
  std::complex<long double> eval(std::complex<long double> x) const;
  long double eval(long double x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form such as "l^3 - 2*l".
  std::string pretty(std::string_view var = "l") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws DomainError on b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// a / b when b divides a exactly; throws DomainError otherwise.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p(lambda - c).
Polynomial poly_shift(const Polynomial& p, const Rational& c);

/// p(q(lambda)).
Polynomial compose(const Polynomial& p, const Polynomial& q);

/// Integer power.
Polynomial pow(const Polynomial& p, std::size_t e);

/// Square-free decomposition (Yun): p = lc * prod factor^multiplicity with
/// each factor monic, square-free and pairwise coprime. Factors of degree
/// zero are omitted.
struct SquareFreeFactor {
  Polynomial factor;
  std::size_t multiplicity;
};
std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p);

/// True when gcd(p, p') is constant.
bool is_square_free(const Polynomial& p);

}  // namespace fiedler
