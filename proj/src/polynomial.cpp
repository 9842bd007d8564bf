#include "fiedler/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "fiedler/errors.hpp"

namespace fiedler {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& root) { return Polynomial{-root, Rational(1)}; }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Degree Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t Polynomial::deg() const {
  if (coeffs_.empty()) throw DomainError("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool Polynomial::is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  Polynomial r = *this;
  const Rational inv = 1 / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = coeffs_[j] * static_cast<unsigned long>(j);
  return Polynomial(std::move(d));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<long double> Polynomial::eval(std::complex<long double> x) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

long double Polynomial::eval(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string Polynomial::pretty(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const Rational& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (j == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << "*";
    os << var;
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero() || a.deg() < b.deg()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = b.deg();
  std::vector<Rational> quo(a.deg() - db + 1);
  const Rational inv_lead = 1 / b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational q = rem[k + db] * inv_lead;
    quo[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Polynomial poly_shift(const Polynomial& p, const Rational& c) {
  // Horner: accumulate acc = acc * (lambda - c) + a_j from the top.
  const Polynomial step = Polynomial::linear_root(c);
  Polynomial acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * step + Polynomial::constant(*it);
  return acc;
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + Polynomial::constant(*it);
  return acc;
}

Polynomial pow(const Polynomial& p, std::size_t e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (p.deg() == 0) return out;

  // Yun's algorithm over a field of characteristic zero.
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = exact_div(f, a);
  Polynomial c = exact_div(df, a);
  Polynomial d = c - b.derivative();
  std::size_t i = 1;
  while (b.deg() > 0) {
    Polynomial g = gcd(b, d);
    if (g.deg() > 0) out.push_back({g, i});
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool is_square_free(const Polynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).deg() == 0;
}

}  // namespace fiedler
