#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hhq/rational.hpp"

namespace hhq {

/// m = root^2 * core with core squarefree (sign carried by core).
struct SquareSplit {
  Integer root;
  Integer core;
};

/// Exact squarefree decomposition by trial division up to the cube root of the
/// remaining cofactor. m must be nonzero.
SquareSplit split_square(const Integer& m);

/// Element a + b*sqrt(D) of the quadratic field Q(sqrt(D)).
///
/// D is stored squarefree, so sqrt(8) is held as 2*sqrt(2). A value built from
/// a bare Rational has no discriminant yet ("unbound"); it joins the field of
/// whatever bound value it is combined with. Combining two bound values with
/// different discriminants throws MixedDiscriminant.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational value) : rat_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(std::int64_t value) : rat_(value) {}         // NOLINT(google-explicit-constructor)
  /// Throws PerfectSquareDiscriminant when D is a rational square (including 0 and 1).
  QuadExt(Rational rat, Rational surd, const Integer& discriminant);

  /// 0 + 1*sqrt(D).
  static QuadExt sqrt_of(const Integer& discriminant) { return QuadExt(Rational(0), Rational(1), discriminant); }

  /// Accepts "a + b*sqrt(D)" (exactly as rendered) or a bare rational.
  static QuadExt parse(std::string_view text);

  const Rational& rational_part() const { return rat_; }
  const Rational& surd_part() const { return surd_; }
  /// Zero when unbound.
  const Integer& discriminant() const { return disc_; }
  bool bound() const { return disc_ != 0; }

  bool is_zero() const { return rat_.is_zero() && surd_.is_zero(); }
  bool is_rational() const { return surd_.is_zero(); }

  /// Field conjugate a - b*sqrt(D).
  QuadExt conjugate() const;
  /// a^2 - b^2 D.
  Rational field_norm() const;
  /// Throws DivisionByZero for zero.
  QuadExt inverse() const;

  std::string str() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend QuadExt operator-(QuadExt a) {
    a.rat_ = -a.rat_;
    a.surd_ = -a.surd_;
    return a;
  }

  /// Componentwise; throws MixedDiscriminant for two bound, different fields.
  friend bool operator==(const QuadExt& a, const QuadExt& b);

 private:
  Integer common_discriminant(const QuadExt& o) const;

  Rational rat_;
  Rational surd_;
  Integer disc_{0};
};

QuadExt pow(const QuadExt& base, std::int64_t exponent);

struct QuadRoots {
  QuadExt alpha;  // (p + sqrt(D)) / 2
  QuadExt beta;   // (p - sqrt(D)) / 2
};

/// Roots of x^2 - p x + q = 0 with D = p^2 - 4q.
/// Throws RepeatedRoot when D = 0 and RationalRoots when D is a nonzero rational square.
QuadRoots make_quad_roots(const Rational& p, const Rational& q);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace hhq
