#include "hhq/rational.hpp"

#include <cctype>
#include <ostream>

#include "hhq/error.hpp"

namespace hhq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::MixedDiscriminant: return "mixed discriminant";
    case ErrorKind::PerfectSquareDiscriminant: return "perfect square discriminant";
    case ErrorKind::RepeatedRoot: return "repeated root";
    case ErrorKind::RationalRoots: return "rational roots";
    case ErrorKind::NegativeIndexWithZeroQ: return "negative index with q = 0";
    case ErrorKind::EmptyRange: return "empty range";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InexactValue: return "inexact value";
  }
  return "unknown error";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  return Rational(Integer(std::string(num)), Integer(std::string(den)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return Rational(1) / pow(base, -exponent);
  }
  Rational result(1), b = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hhq
