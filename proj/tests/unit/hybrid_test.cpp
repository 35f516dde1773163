#include <gtest/gtest.h>

#include "generators.hpp"
#include "hhq/hybrid.hpp"

namespace hhq {
namespace {

using H = Hybrid<Rational>;

H unit(HybridUnit u) { return H::unit(u); }
const H one = unit(HybridUnit::One), hi = unit(HybridUnit::I), eps = unit(HybridUnit::Eps), hh = unit(HybridUnit::H);

TEST(Hybrid, UnitRelations) {
  EXPECT_EQ(hi * hi, -one);
  EXPECT_EQ(eps * eps, H{});
  EXPECT_EQ(hh * hh, one);
  EXPECT_EQ(hi * hh, eps + hi);
  EXPECT_EQ(hh * hi, -eps - hi);
  EXPECT_EQ(hi * eps, one - hh);
  EXPECT_EQ(eps * hi, one + hh);
  EXPECT_EQ(eps * hh, -eps);
  EXPECT_EQ(hh * eps, eps);
}

TEST(Hybrid, TableDrivesUnitProducts) {
  std::array<H, 4> units{one, hi, eps, hh};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const auto& row = kHybridUnitProducts[a][b];
      H expected{row[0], row[1], row[2], row[3]};
      EXPECT_EQ(units[a] * units[b], expected) << a << "," << b;
    }
}

TEST(Hybrid, Conjugate) {
  H z{1, 2, 3, 4};
  EXPECT_EQ(z.conj(), (H{1, -2, -3, -4}));
  EXPECT_EQ(z.conj().conj(), z);
  EXPECT_EQ((H{5, 0, 0, 0}).conj(), (H{5, 0, 0, 0}));
}

TEST(Hybrid, Character) {
  EXPECT_EQ(hh.character(), Rational(-1));
  EXPECT_EQ(one.character(), Rational(1));
  EXPECT_EQ((hi + eps).character(), Rational(-1));
  EXPECT_EQ((H{1, 2, 3, 4}).character(), Rational(1 + 1 - 9 - 16));
}

TEST(Hybrid, RenderAndParse) {
  EXPECT_EQ((H{1, 2, 3, 4}).str(), "1 + 2*hi + 3*eps + 4*hh");
  EXPECT_EQ((H{0, -1, 0, Rational(Integer(1), Integer(2))}).str(), "-1*hi + 1/2*hh");
  EXPECT_EQ(H{}.str(), "0");
  EXPECT_EQ(H::parse("-1*hi + 1/2*hh"), (H{0, -1, 0, Rational(Integer(1), Integer(2))}));
  EXPECT_EQ(H::parse("0"), H{});
  EXPECT_THROW(H::parse("3*q"), Error);
}

TEST(Hybrid, QuadExtCoefficients) {
  QuadExt phi(Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(2)), Integer(5));
  Hybrid<QuadExt> z{phi, 1, 0, 0};
  EXPECT_EQ(z.str(), "(1/2 + 1/2*sqrt(5)) + 1*hi");
  EXPECT_EQ(Hybrid<QuadExt>::parse(z.str()), z);
}

TEST(HybridProperty, RingLaws) {
  testing::Gen g(31);
  for (int t = 0; t < 500; ++t) {
    H x = g.hybrid(), y = g.hybrid(), z = g.hybrid();
    EXPECT_EQ(x * y, mul_by_table(kHybridUnitProducts, x, y));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x + y) * z, x * z + y * z);
    EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
    EXPECT_EQ(x * x.conj(), (H{x.character(), 0, 0, 0}));
    EXPECT_EQ(x.conj().conj(), x);
    EXPECT_EQ(H::parse(x.str()), x);
  }
}

TEST(HybridProperty, NotCommutative) {
  EXPECT_NE(hi * hh, hh * hi);
  EXPECT_NE(hi * eps, eps * hi);
}

}  // namespace
}  // namespace hhq
