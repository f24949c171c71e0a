#include <random>

#include <gtest/gtest.h>

#include "biorder/bipoly.hpp"
#include "biorder/errors.hpp"
#include "catalog.hpp"

namespace biorder {
namespace {

const BiPoly x = BiPoly::x();
const BiPoly y = BiPoly::y();

BiPoly c(long v) { return BiPoly(Rational(v)); }

BiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4), count(0, 4), den(1, 3);
  BiPoly p;
  for (int t = count(rng); t > 0; --t) p += BiPoly::term(deg(rng), deg(rng), Rational(coef(rng), den(rng)));
  return p;
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("12345678901234567890").to_string(), "12345678901234567890");
  EXPECT_THROW(Rational(1, 0), InputError);
  EXPECT_THROW(Rational::parse("1/0"), InputError);
  EXPECT_THROW(Rational::parse("1.5"), InputError);
}

TEST(BiPoly, Arithmetic) {
  EXPECT_EQ((x + y) + (x - y), 2 * x);
  EXPECT_EQ((x + y) + (x - y), BiPoly::term(1, 0, 2));
  EXPECT_EQ(x * y, BiPoly::term(1, 1, 1));
  EXPECT_EQ(-BiPoly(), BiPoly());
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_TRUE((x - x).terms().empty());
}

TEST(BiPoly, Degrees) {
  const BiPoly p = x * x * y + y * y * y * y - c(7);
  EXPECT_EQ(p.deg_x(), 2);
  EXPECT_EQ(p.deg_y(), 4);
  EXPECT_EQ(p.total_degree(), 4);
  EXPECT_EQ(BiPoly().total_degree(), -1);
  EXPECT_EQ(c(3).total_degree(), 0);
}

TEST(BiPoly, CanonicalText) {
  EXPECT_EQ((x * x * x - 3 * x * y + 2 * y).to_string(), "x^3 - 3*x*y + 2*y");
  EXPECT_EQ((y - x).to_string(), "-x + y");
  EXPECT_EQ(BiPoly().to_string(), "0");
  EXPECT_EQ(c(-5).to_string(), "-5");
  EXPECT_EQ((Rational(1, 2) * (x * x - x - y * y + y)).to_string(), "1/2*x^2 - 1/2*y^2 - 1/2*x + 1/2*y");
  EXPECT_EQ((x * y * y - Rational(2, 3) * x * x * y).to_string(), "-2/3*x^2*y + x*y^2");
}

TEST(BiPoly, Evaluate) {
  EXPECT_EQ((x * x - 3 * x * y + 2 * y).evaluate(2, 1), Rational(0));
  EXPECT_EQ(x.evaluate(5, 0), Rational(5));
  EXPECT_EQ(binom_poly(x - y, 2).evaluate(3, 1), Rational(1));
  EXPECT_EQ(BiPoly().evaluate(9, 9), Rational(0));
}

TEST(BiPoly, SubstituteNegate) {
  EXPECT_EQ((x * x + y).substitute_negate(), x * x - y);
  EXPECT_EQ((x * y).substitute_negate(), x * y);
  EXPECT_EQ(c(7).substitute_negate(), c(7));
}

TEST(BiPoly, SubstituteShiftY) {
  EXPECT_EQ((y * y).substitute_shift_y(1), y * y + 2 * y + c(1));
  EXPECT_EQ(x.substitute_shift_y(1), x);
  EXPECT_EQ(y.substitute_shift_y(-1), y - c(1));
  EXPECT_EQ((x * y * y * y).substitute_shift_y(2), x * pow(y + c(2), 3));
}

TEST(BiPoly, Compose) {
  const BiPoly p = x * x - 3 * x * y + 2 * y;
  EXPECT_EQ(p.compose(x, x), x * x - 3 * x * x + 2 * x);
  EXPECT_EQ(p.compose(-x, -y), p.substitute_negate());
  EXPECT_EQ(p.compose(x, y + c(1)), p.substitute_shift_y(1));
}

TEST(BinomPoly, Definition) {
  EXPECT_EQ(binom_poly(x, 2), Rational(1, 2) * (x * x - x));
  EXPECT_EQ(binom_poly(x, 0), c(1));
  EXPECT_EQ(binom_poly(y - c(2), 1).evaluate(0, 1), Rational(-1));
  EXPECT_EQ(testing::falling_binomial(-1, 1), Rational(-1));
  EXPECT_EQ(binom_poly(-x, 2), binom_poly(x + c(1), 2));
  EXPECT_EQ(binom_poly(-x, 2), Rational(1, 2) * (x * x + x));
  EXPECT_THROW(binom_poly(x * y, 2), InputError);
  EXPECT_THROW(binom_poly(x, -1), InputError);
}

TEST(BinomPoly, AgreesWithFallingFactorialOnIntegers) {
  for (int m = 0; m <= 6; ++m) {
    const BiPoly p = binom_poly(x - y + c(1), m);
    for (long a = -6; a <= 6; ++a) {
      for (long b = -6; b <= 6; ++b) {
        EXPECT_EQ(p.evaluate(a, b), testing::falling_binomial(a - b + 1, m)) << "m=" << m;
      }
    }
  }
}

TEST(BinomPoly, NegationIdentity) {
  // binom(-arg, m) == (-1)^m binom(arg + m - 1, m)
  const BiPoly args[] = {x, y, x - y, x + y - c(3), 2 * x - y + c(5)};
  for (const BiPoly& arg : args) {
    for (int m = 0; m <= 6; ++m) {
      BiPoly rhs = binom_poly(arg + c(m - 1), m);
      if (m % 2 != 0) rhs = -rhs;
      EXPECT_EQ(binom_poly(-arg, m), rhs) << arg << " m=" << m;
    }
  }
}

TEST(BiPolyProperty, RingAxioms) {
  std::mt19937 rng(20190108);
  for (int trial = 0; trial < 200; ++trial) {
    const BiPoly a = random_poly(rng), b = random_poly(rng), d = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + d, a + (b + d));
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(BiPolyProperty, NegateCommutesWithEvaluation) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> pt(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const BiPoly p = random_poly(rng);
    const Rational x0(pt(rng), 1 + trial % 3), y0(pt(rng));
    EXPECT_EQ(p.substitute_negate().evaluate(x0, y0), p.evaluate(-x0, -y0));
    EXPECT_EQ(p.substitute_shift_y(3).evaluate(x0, y0), p.evaluate(x0, y0 + Rational(3)));
  }
}

}  // namespace
}  // namespace biorder
