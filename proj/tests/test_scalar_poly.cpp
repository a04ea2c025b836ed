#include <gtest/gtest.h>

#include "htspec/errors.hpp"
#include "htspec/polynomial.hpp"

using namespace htspec;

namespace {

Polynomial P(std::vector<Scalar> c) { return Polynomial(std::move(c)); }

}  // namespace

TEST(Scalar, RationalArithmeticStaysExact) {
  Scalar a = Scalar::rational(1, 3);
  Scalar b = Scalar::rational(1, 6);
  Scalar s = a + b;
  ASSERT_TRUE(s.is_rational());
  EXPECT_EQ(s, Scalar::rational(1, 2));
  EXPECT_EQ(a * b, Scalar::rational(1, 18));
  EXPECT_EQ(a / b, Scalar(2));
  EXPECT_EQ(Scalar::rational(2, 3).pow(3), Scalar::rational(8, 27));
}

TEST(Scalar, ComplexPromotes) {
  Scalar z = Scalar(Complex(0.0, 1.0)) * Scalar(2);
  EXPECT_FALSE(z.is_rational());
  EXPECT_EQ(z.to_complex(), Complex(0.0, 2.0));
  EXPECT_FALSE(z.is_real());
}

TEST(Scalar, Parse) {
  EXPECT_EQ(Scalar::parse("1/3"), Scalar::rational(1, 3));
  EXPECT_EQ(Scalar::parse("-4/6"), Scalar::rational(-2, 3));
  EXPECT_EQ(Scalar::parse("7"), Scalar(7));
  EXPECT_FALSE(Scalar::parse("0.5").is_rational());
  EXPECT_THROW(Scalar::parse("1/0"), DomainError);
  EXPECT_THROW(Scalar::parse("abc"), DomainError);
  EXPECT_EQ(Scalar::rational(5, 10).to_string(), "1/2");
}

TEST(Polynomial, ProductGivesCubeMinusOne) {
  Polynomial p = P({-1, 1}) * P({1, 1, 1});
  EXPECT_EQ(p, P({-1, 0, 0, 1}));
  EXPECT_EQ(p.evaluate(Scalar(1)), Scalar(0));
}

TEST(Polynomial, ScaleByHalf) {
  Polynomial p = P({-2, 0, 0, 1}).scaled(Scalar::rational(1, 2));
  EXPECT_EQ(p, P({-1, 0, 0, Scalar::rational(1, 2)}));
}

TEST(Polynomial, TrimsAndZero) {
  Polynomial p = P({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
}

TEST(Polynomial, MixedBackendsPromote) {
  Polynomial p = P({1, 1}) * P({Scalar(Complex(0, 1)), 1});
  EXPECT_EQ(p.backend(), Backend::kComplex);
  EXPECT_EQ(p.coeff(0).to_complex(), Complex(0, 1));
}

TEST(Polynomial, DivmodReconstructs) {
  Polynomial a = P({3, -2, 0, 5, 1});
  Polynomial b = P({1, Scalar::rational(1, 2), 2});
  DivMod qr = divmod(a, b);
  EXPECT_LT(qr.remainder.degree(), b.degree());
  EXPECT_EQ(qr.quotient * b + qr.remainder, a);
}

TEST(Polynomial, GcdIsMonic) {
  Polynomial common = P({-1, 1}) * P({2, 1});
  Polynomial g = gcd(common * P({5, 3}), common.scaled(7) * P({1, 0, 1}));
  EXPECT_EQ(g, common);
}

TEST(Polynomial, SquarefreeDecomposition) {
  // (x - 1)^3 (x + 2)^2 x
  Polynomial a = P({-1, 1});
  Polynomial b = P({2, 1});
  Polynomial x = P({0, 1});
  Polynomial p = a * a * a * b * b * x.scaled(4);
  auto f = squarefree_decomposition(p);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], x);
  EXPECT_EQ(f[1], b);
  EXPECT_EQ(f[2], a);
}

TEST(Polynomial, DerivativeAndShift) {
  Polynomial p = P({1, 2, 3});
  EXPECT_EQ(p.derivative(), P({2, 6}));
  EXPECT_EQ(p.shifted(2), P({0, 0, 1, 2, 3}));
  EXPECT_EQ(Polynomial::monomial(Scalar(3), 2), P({0, 0, 3}));
  EXPECT_EQ(Polynomial::linear_root(Scalar(4)), P({-4, 1}));
}
