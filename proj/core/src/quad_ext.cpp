#include "hhq/quad_ext.hpp"

#include <ostream>

#include "hhq/error.hpp"

namespace hhq {

SquareSplit split_square(const Integer& m) {
  if (m == 0) throw Error(ErrorKind::PerfectSquareDiscriminant, "zero has no squarefree part");
  Integer rest = abs(m);
  Integer root = 1, core = sgn(m) < 0 ? -1 : 1;

  auto strip = [&](const Integer& prime) {
    unsigned count = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
      rest /= prime;
      ++count;
    }
    for (unsigned k = 0; k < count / 2; ++k) root *= prime;
    if (count % 2) core *= prime;
  };

  strip(2);
  for (Integer p = 3; p * p * p <= rest; p += 2) strip(p);

  // What remains has at most two prime factors.
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      root *= r;
    } else {
      core *= rest;
    }
  }
  return {root, core};
}

QuadExt::QuadExt(Rational rat, Rational surd, const Integer& discriminant) : rat_(std::move(rat)) {
  if (discriminant == 0)
    throw Error(ErrorKind::PerfectSquareDiscriminant, "discriminant 0 does not define a quadratic field");
  auto [root, core] = split_square(discriminant);
  if (core == 1)
    throw Error(ErrorKind::PerfectSquareDiscriminant,
                "discriminant " + discriminant.get_str() + " is a perfect square");
  surd_ = std::move(surd) * Rational(root);
  disc_ = core;
}

Integer QuadExt::common_discriminant(const QuadExt& o) const {
  if (!bound()) return o.disc_;
  if (!o.bound() || disc_ == o.disc_) return disc_;
  throw Error(ErrorKind::MixedDiscriminant,
              "cannot combine sqrt(" + disc_.get_str() + ") and sqrt(" + o.disc_.get_str() + ") values");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  disc_ = common_discriminant(o);
  rat_ += o.rat_;
  surd_ += o.surd_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  disc_ = common_discriminant(o);
  rat_ -= o.rat_;
  surd_ -= o.surd_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Integer d = common_discriminant(o);
  // (a + b r)(a' + b' r) = (a a' + b b' D) + (a b' + a' b) r
  Rational a = rat_ * o.rat_;
  if (!surd_.is_zero() && !o.surd_.is_zero()) a += surd_ * o.surd_ * Rational(d);
  Rational b = rat_ * o.surd_ + surd_ * o.rat_;
  rat_ = std::move(a);
  surd_ = std::move(b);
  disc_ = d;
  return *this;
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.surd_ = -r.surd_;
  return r;
}

Rational QuadExt::field_norm() const {
  if (surd_.is_zero()) return rat_ * rat_;
  return rat_ * rat_ - surd_ * surd_ * Rational(disc_);
}

QuadExt QuadExt::inverse() const {
  // D is not a square, so a^2 - b^2 D vanishes only at zero.
  Rational n = field_norm();
  if (n.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(sqrt(D))");
  QuadExt r = conjugate();
  r.rat_ /= n;
  r.surd_ /= n;
  return r;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  a.common_discriminant(b);
  return a.rat_ == b.rat_ && a.surd_ == b.surd_;
}

std::string QuadExt::str() const {
  if (!bound()) return rat_.str();
  return rat_.str() + " + " + surd_.str() + "*sqrt(" + disc_.get_str() + ")";
}

QuadExt QuadExt::parse(std::string_view text) {
  auto plus = text.find(" + ");
  if (plus == std::string_view::npos) return QuadExt(Rational::parse(text));
  std::string_view head = text.substr(0, plus);
  std::string_view tail = text.substr(plus + 3);
  constexpr std::string_view marker = "*sqrt(";
  auto star = tail.find(marker);
  if (star == std::string_view::npos || tail.back() != ')')
    throw Error(ErrorKind::Parse, "malformed quadratic value '" + std::string(text) + "'");
  std::string_view surd = tail.substr(0, star);
  std::string_view disc = tail.substr(star + marker.size(), tail.size() - star - marker.size() - 1);
  Rational d = Rational::parse(disc);
  if (!d.is_integer()) throw Error(ErrorKind::Parse, "discriminant must be an integer in '" + std::string(text) + "'");
  return QuadExt(Rational::parse(head), Rational::parse(surd), d.numerator());
}

QuadExt pow(const QuadExt& base, std::int64_t exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  QuadExt result(1), b = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

QuadRoots make_quad_roots(const Rational& p, const Rational& q) {
  Rational disc = p * p - Rational(4) * q;
  if (disc.is_zero())
    throw Error(ErrorKind::RepeatedRoot, "x^2 - (" + p.str() + ")x + (" + q.str() + ") has a repeated root");
  // sqrt(n/d) = sqrt(n d) / d
  Integer radicand = disc.numerator() * disc.denominator();
  if (sgn(radicand) > 0 && mpz_perfect_square_p(radicand.get_mpz_t()))
    throw Error(ErrorKind::RationalRoots, "x^2 - (" + p.str() + ")x + (" + q.str() + ") has rational roots");
  Rational half_surd = Rational(Integer(1), Integer(2) * disc.denominator());
  Rational half_p = p / Rational(2);
  return {QuadExt(half_p, half_surd, radicand), QuadExt(half_p, -half_surd, radicand)};
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

}  // namespace hhq
