#include <gtest/gtest.h>

#include "generators.hpp"
#include "hhq/quaternion.hpp"

namespace hhq {
namespace {

using Q = Quaternion<Rational>;

const Q one = Q::unit(QuaternionUnit::One), i = Q::unit(QuaternionUnit::I), j = Q::unit(QuaternionUnit::J),
        k = Q::unit(QuaternionUnit::K);

TEST(Quaternion, UnitRelations) {
  EXPECT_EQ(i * i, -one);
  EXPECT_EQ(j * j, -one);
  EXPECT_EQ(k * k, -one);
  EXPECT_EQ(i * j * k, -one);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(k * j, -i);
}

TEST(Quaternion, TableDrivesUnitProducts) {
  std::array<Q, 4> units{one, i, j, k};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const auto& row = kQuaternionUnitProducts[a][b];
      EXPECT_EQ(units[a] * units[b], (Q{row[0], row[1], row[2], row[3]})) << a << "," << b;
    }
}

TEST(Quaternion, Examples) {
  EXPECT_EQ((Q{1, 1, 1, 1}) * (Q{1, -1, -1, -1}), (Q{4, 0, 0, 0}));
  Q q{1, 2, 3, 4};
  EXPECT_EQ(q * q.conj(), (Q{30, 0, 0, 0}));
  EXPECT_EQ(q.norm_sq(), Rational(30));
  EXPECT_EQ(Q{}.norm_sq(), Rational(0));
  EXPECT_EQ((one + i).norm_sq(), Rational(2));
  EXPECT_EQ(i.conj(), -i);
  EXPECT_EQ(q * one, q);
}

TEST(Quaternion, RenderAndParse) {
  EXPECT_EQ((Q{1, 2, 3, 4}).str(), "1 + 2*i + 3*j + 4*k");
  EXPECT_EQ((Q{0, 0, -5, 0}).str(), "-5*j");
  EXPECT_EQ(Q{}.str(), "0");
  EXPECT_EQ(Q::parse("7 + -1/3*k"), (Q{7, 0, 0, Rational(Integer(-1), Integer(3))}));
  EXPECT_THROW(Q::parse("1*hi"), Error);
}

TEST(QuaternionProperty, DivisionAlgebraLaws) {
  testing::Gen g(37);
  for (int t = 0; t < 500; ++t) {
    Q x = g.quaternion(), y = g.quaternion(), z = g.quaternion();
    EXPECT_EQ(x * y, mul_by_table(kQuaternionUnitProducts, x, y));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
    EXPECT_EQ((x * y).norm_sq(), x.norm_sq() * y.norm_sq());
    EXPECT_EQ(x * x.conj(), (Q{x.norm_sq(), 0, 0, 0}));
    EXPECT_EQ(Q::parse(x.str()), x);
  }
}

}  // namespace
}  // namespace hhq
