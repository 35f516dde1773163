#include <gtest/gtest.h>

#include "generators.hpp"
#include "hhq/quad_ext.hpp"

namespace hhq {
namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no hhq::Error thrown";
  return ErrorKind::Parse;
}

Rational r(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

TEST(SplitSquare, ExtractsLargestSquare) {
  auto s = split_square(Integer(8));
  EXPECT_EQ(s.root, 2);
  EXPECT_EQ(s.core, 2);
  s = split_square(Integer(720));  // 144 * 5
  EXPECT_EQ(s.root, 12);
  EXPECT_EQ(s.core, 5);
  s = split_square(Integer(-12));
  EXPECT_EQ(s.root, 2);
  EXPECT_EQ(s.core, -3);
  s = split_square(Integer(1009) * 1009 * 7);
  EXPECT_EQ(s.root, 1009);
  EXPECT_EQ(s.core, 7);
  s = split_square(Integer(1000003) * 1000003);
  EXPECT_EQ(s.root, 1000003);
  EXPECT_EQ(s.core, 1);
}

TEST(QuadExt, NormalizesDiscriminant) {
  QuadExt x(r(1), r(1), Integer(8));  // 1 + sqrt(8) = 1 + 2 sqrt(2)
  EXPECT_EQ(x.discriminant(), 2);
  EXPECT_EQ(x.surd_part(), r(2));
  EXPECT_EQ(x.str(), "1 + 2*sqrt(2)");
  EXPECT_EQ(QuadExt(r(0), r(1, 2), Integer(20)).str(), "0 + 1*sqrt(5)");
}

TEST(QuadExt, RejectsSquareDiscriminants) {
  EXPECT_EQ(kind_of([] { QuadExt(r(0), r(1), Integer(9)); }), ErrorKind::PerfectSquareDiscriminant);
  EXPECT_EQ(kind_of([] { QuadExt(r(0), r(1), Integer(0)); }), ErrorKind::PerfectSquareDiscriminant);
  EXPECT_EQ(kind_of([] { QuadExt(r(0), r(1), Integer(1)); }), ErrorKind::PerfectSquareDiscriminant);
}

TEST(QuadExt, GoldenRatioArithmetic) {
  QuadExt phi(r(1, 2), r(1, 2), Integer(5));
  QuadExt psi = phi.conjugate();
  EXPECT_EQ(phi + psi, QuadExt(1));
  EXPECT_EQ(phi * psi, QuadExt(-1));
  EXPECT_EQ(phi * phi, phi + QuadExt(1));
  EXPECT_EQ(phi.field_norm(), r(-1));
  EXPECT_EQ(phi * phi.inverse(), QuadExt(1));
  EXPECT_EQ(pow(phi, -3) * pow(phi, 3), QuadExt(1));
  // phi^10 = (L10 + F10 sqrt 5) / 2
  EXPECT_EQ(pow(phi, 10), QuadExt(r(123, 2), r(55, 2), Integer(5)));
}

TEST(QuadExt, NegativeDiscriminant) {
  QuadExt i(r(0), r(1), Integer(-1));
  EXPECT_EQ(i * i, QuadExt(-1));
  EXPECT_EQ(QuadExt(r(0), r(1), Integer(-12)).str(), "0 + 2*sqrt(-3)");
}

TEST(QuadExt, MixedDiscriminantThrows) {
  QuadExt a = QuadExt::sqrt_of(Integer(2)), b = QuadExt::sqrt_of(Integer(3));
  EXPECT_EQ(kind_of([&] { return a + b; }), ErrorKind::MixedDiscriminant);
  EXPECT_EQ(kind_of([&] { return a * b; }), ErrorKind::MixedDiscriminant);
  EXPECT_EQ(kind_of([&] { return a == b; }), ErrorKind::MixedDiscriminant);
  // unbound rationals adopt the other operand's field
  EXPECT_EQ((a + QuadExt(1)).discriminant(), 2);
  EXPECT_EQ((QuadExt(r(3, 4)) * b).str(), "0 + 3/4*sqrt(3)");
}

TEST(QuadExt, InverseOfZero) {
  EXPECT_EQ(kind_of([] { return QuadExt(r(0), r(0), Integer(5)).inverse(); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(kind_of([] { return QuadExt(1) / QuadExt(0); }), ErrorKind::DivisionByZero);
}

TEST(QuadExt, ParseRoundTrip) {
  for (const char* s : {"1/2 + -3/7*sqrt(5)", "0 + 1*sqrt(2)", "-4 + 0*sqrt(13)", "5/3"})
    EXPECT_EQ(QuadExt::parse(s).str(), s);
  EXPECT_EQ(QuadExt::parse("1 + 1*sqrt(8)").str(), "1 + 2*sqrt(2)");
  EXPECT_EQ(kind_of([] { QuadExt::parse("1 + 2*sqrt(x)"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { QuadExt::parse("1 + 2sqrt(5)"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { QuadExt::parse("1 + 2*sqrt(5/2)"); }), ErrorKind::Parse);
}

TEST(QuadRoots, Classification) {
  auto fib = make_quad_roots(1, -1);
  EXPECT_EQ(fib.alpha.str(), "1/2 + 1/2*sqrt(5)");
  EXPECT_EQ(fib.beta.str(), "1/2 + -1/2*sqrt(5)");
  auto pell = make_quad_roots(2, -1);
  EXPECT_EQ(pell.alpha.str(), "1 + 1*sqrt(2)");
  // rational p, q: x^2 - (1/2)x - 1/3, D = 1/4 + 4/3 = 19/12
  auto frac = make_quad_roots(r(1, 2), r(-1, 3));
  EXPECT_EQ(frac.alpha + frac.beta, QuadExt(r(1, 2)));
  EXPECT_EQ(frac.alpha * frac.beta, QuadExt(r(-1, 3)));
  EXPECT_EQ(kind_of([] { make_quad_roots(2, 1); }), ErrorKind::RepeatedRoot);
  EXPECT_EQ(kind_of([] { make_quad_roots(3, 2); }), ErrorKind::RationalRoots);
  EXPECT_EQ(kind_of([] { make_quad_roots(1, -2); }), ErrorKind::RationalRoots);
  EXPECT_EQ(kind_of([] { make_quad_roots(r(5, 2), r(1)); }), ErrorKind::RationalRoots);
  // complex roots are still a quadratic field
  auto complex = make_quad_roots(1, 1);
  EXPECT_EQ(complex.alpha * complex.beta, QuadExt(1));
}

TEST(QuadExtProperty, FieldLaws) {
  testing::Gen g(23);
  for (int t = 0; t < 500; ++t) {
    Integer d = std::vector<long>{2, 3, 5, 13, -1, -7}[g.integer(0, 5)];
    QuadExt a(g.rational(), g.rational(), d), b(g.rational(), g.rational(), d), c(g.rational(), g.rational(), d);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    EXPECT_EQ(a.field_norm(), (a * a.conjugate()).rational_part());
    if (!a.is_zero()) EXPECT_EQ(b / a * a, b);
    EXPECT_EQ(QuadExt::parse(a.str()), a);
  }
}

}  // namespace
}  // namespace hhq
