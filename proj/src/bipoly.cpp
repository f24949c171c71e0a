#include "biorder/bipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

#include "biorder/errors.hpp"

namespace biorder {

BiPoly::BiPoly(const Rational& constant) { add_term({0, 0}, constant); }

BiPoly BiPoly::x() { return term(1, 0, 1); }

BiPoly BiPoly::y() { return term(0, 1, 1); }

BiPoly BiPoly::term(int dx, int dy, const Rational& coefficient) {
  if (dx < 0 || dy < 0) throw InputError("negative exponent in monomial");
  BiPoly p;
  p.add_term({dx, dy}, coefficient);
  return p;
}

void BiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational BiPoly::coefficient(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dy);
  return d;
}

int BiPoly::total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term({ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
  }
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  *this = *this * other;
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Rational BiPoly::evaluate(const Rational& x0, const Rational& y0) const {
  // Power tables keep this linear in the number of terms for dense inputs.
  std::vector<Rational> xp{1}, yp{1};
  for (int i = 1; i <= deg_x(); ++i) xp.push_back(xp.back() * x0);
  for (int i = 1; i <= deg_y(); ++i) yp.push_back(yp.back() * y0);
  Rational sum;
  for (const auto& [m, c] : terms_) sum += c * xp[m.dx] * yp[m.dy];
  return sum;
}

BiPoly BiPoly::substitute_negate() const {
  BiPoly out = *this;
  for (auto& [m, c] : out.terms_) {
    if (m.total() % 2 != 0) c = -c;
  }
  return out;
}

BiPoly BiPoly::substitute_shift_y(long s) const {
  if (s == 0) return *this;
  BiPoly out;
  const Rational shift(s);
  for (const auto& [m, c] : terms_) {
    // y^d -> sum_j binom(d, j) y^j s^(d-j)
    mpz_class binom = 1;
    Rational s_power = 1;
    for (int j = m.dy; j >= 0; --j) {
      out.add_term({m.dx, j}, c * Rational(binom) * s_power);
      // binom(d, j-1) = binom(d, j) * j / (d - j + 1)
      binom = binom * j / (m.dy - j + 1);
      s_power *= shift;
    }
  }
  return out;
}

BiPoly BiPoly::compose(const BiPoly& qx, const BiPoly& qy) const {
  std::vector<BiPoly> xp{BiPoly(1)}, yp{BiPoly(1)};
  for (int i = 1; i <= deg_x(); ++i) xp.push_back(xp.back() * qx);
  for (int i = 1; i <= deg_y(); ++i) yp.push_back(yp.back() * qy);
  BiPoly out;
  for (const auto& [m, c] : terms_) out += c * (xp[m.dx] * yp[m.dy]);
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    if (m.total() == 0 || !(magnitude == Rational(1))) factors.push_back(magnitude.to_string());
    if (m.dx == 1) factors.emplace_back("x");
    if (m.dx > 1) factors.push_back("x^" + std::to_string(m.dx));
    if (m.dy == 1) factors.emplace_back("y");
    if (m.dy > 1) factors.push_back("y^" + std::to_string(m.dy));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) os << '*';
      os << factors[i];
    }
  }
  return os.str();
}

BiPoly pow(const BiPoly& base, int exponent) {
  if (exponent < 0) throw InputError("negative polynomial exponent");
  BiPoly out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

BiPoly binom_poly(const BiPoly& arg, int m) {
  if (m < 0) throw InputError("binom_poly: negative lower index");
  if (arg.total_degree() > 1) throw InputError("binom_poly: argument must be affine in x and y");
  BiPoly out(1);
  mpz_class factorial = 1;
  for (int t = 0; t < m; ++t) {
    out *= arg - BiPoly(Rational(t));
    factorial *= t + 1;
  }
  return out * Rational(mpq_class(mpz_class(1), factorial));
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

}  // namespace biorder
