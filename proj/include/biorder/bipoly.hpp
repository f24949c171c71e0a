#ifndef BIORDER_BIPOLY_HPP
#define BIORDER_BIPOLY_HPP

#include <map>
#include <string>

#include "biorder/rational.hpp"

namespace biorder {

struct Monomial {
  int dx = 0;
  int dy = 0;

  int total() const { return dx + dy; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: total degree descending, then x-degree descending.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.dx > b.dx;
  }
};

// Sparse polynomial in x and y with exact rational coefficients.
//
// The term map never stores a zero coefficient, so structural equality is
// polynomial equality and iteration yields the canonical print order.
class BiPoly {
public:
  using TermMap = std::map<Monomial, Rational, CanonicalOrder>;

  BiPoly() = default;
  BiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static BiPoly x();
  static BiPoly y();
  static BiPoly term(int dx, int dy, const Rational& coefficient);

  const TermMap& terms() const { return terms_; }
  Rational coefficient(int dx, int dy) const;
  bool is_zero() const { return terms_.empty(); }

  // Degrees are -1 for the zero polynomial.
  int deg_x() const;
  int deg_y() const;
  int total_degree() const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  BiPoly& operator*=(const Rational& scalar);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
  BiPoly operator-() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  Rational evaluate(const Rational& x0, const Rational& y0) const;

  // p(-x, -y).
  BiPoly substitute_negate() const;
  // p(x, y + s), expanded binomially.
  BiPoly substitute_shift_y(long s) const;
  // p(qx(x,y), qy(x,y)).
  BiPoly compose(const BiPoly& qx, const BiPoly& qy) const;

  // e.g. "x^3 - 3*x*y + 2*y", "1/2*x^2 - 1/2*x", "0".
  std::string to_string() const;

private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

BiPoly pow(const BiPoly& base, int exponent);

// binom(arg, m) = arg (arg - 1) ... (arg - m + 1) / m!. `arg` must be affine in x and y.
BiPoly binom_poly(const BiPoly& arg, int m);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

}  // namespace biorder

#endif  // BIORDER_BIPOLY_HPP
