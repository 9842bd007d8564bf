#pragma once

#include <string>

#include "fiedler/polynomial.hpp"

namespace fiedler {

/// Element of Q(lambda) kept in lowest terms with a monic denominator.
/// Zero is stored as 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  explicit RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial::constant(1)) {}
  explicit RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}
  explicit RationalFunction(int c) : RationalFunction(Rational(c)) {}

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.deg() == 0; }

  Rational eval(const Rational& x) const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string pretty(std::string_view var = "l") const;

 private:
  friend RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den);
  Polynomial num_;
  Polynomial den_;
};

/// num/den in lowest terms with monic denominator. Throws DomainError on den = 0.
RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den);

/// f(lambda - c).
RationalFunction ratfun_shift(const RationalFunction& f, const Rational& c);

}  // namespace fiedler
