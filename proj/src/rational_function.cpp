#include "fiedler/rational_function.hpp"

#include "fiedler/errors.hpp"

namespace fiedler {

RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  RationalFunction r;
  if (num.is_zero()) return r;
  const Polynomial g = gcd(num, den);
  Polynomial n = exact_div(num, g);
  Polynomial d = exact_div(den, g);
  const Rational lead = d.leading();
  r.num_ = n * (1 / lead);
  r.den_ = d.monic();
  return r;
}

RationalFunction ratfun_shift(const RationalFunction& f, const Rational& c) {
  return ratfun_reduce(poly_shift(f.num(), c), poly_shift(f.den(), c));
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (sgn(d) == 0) throw DomainError("evaluation at a pole");
  return num_.eval(x) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  return *this = ratfun_reduce(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  return *this = ratfun_reduce(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  return *this = ratfun_reduce(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw DomainError("division by the zero rational function");
  return *this = ratfun_reduce(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunction::pretty(std::string_view var) const {
  if (is_polynomial()) return num_.pretty(var);
  return "(" + num_.pretty(var) + ")/(" + den_.pretty(var) + ")";
}

}  // namespace fiedler
