#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hhq/hybrid.hpp"
#include "hhq/hybrid_quaternion.hpp"
#include "hhq/quad_ext.hpp"
#include "hhq/quaternion.hpp"
#include "hhq/rational.hpp"

namespace hhq {

/// w_n(w0, w1; p, q): w_n = p w_{n-1} - q w_{n-2}.
struct HoradamParams {
  Rational w0, w1, p, q;

  /// "w(w0,w1;p,q)".
  std::string str() const;
  /// "w0,w1,p,q".
  static HoradamParams parse(std::string_view text);

  friend bool operator==(const HoradamParams&, const HoradamParams&) = default;
};

enum class SequenceKind {
  GeneralizedFibonacci,
  GeneralizedLucas,
  Fibonacci,
  Lucas,
  Pell,
  PellLucas,
  Jacobsthal,
  JacobsthalLucas,
  Mersenne,
  Fermat,
};

/// One of the ten named instantiations. The generalized families carry their
/// own (p, q); the others ignore them.
class SequenceId {
 public:
  explicit SequenceId(SequenceKind kind, Rational p = 0, Rational q = 0);

  SequenceKind kind() const { return kind_; }
  HoradamParams params() const;
  /// "fibonacci", "pell-lucas", "generalized-fibonacci(3,-1)", ...
  std::string name() const;

  /// Accepts the names produced by name(); generalized families require "(p,q)".
  static SequenceId parse(std::string_view text);

  friend bool operator==(const SequenceId&, const SequenceId&) = default;

 private:
  SequenceKind kind_;
  Rational p_, q_;
};

/// All ten registry entries in declaration order, generalized families at (p, q).
std::vector<SequenceId> registry(const Rational& p = 3, const Rational& q = -1);

/// Inclusive index interval, lo <= hi.
struct IndexRange {
  std::int64_t lo;
  std::int64_t hi;

  /// Throws Error(EmptyRange) when lo > hi.
  static IndexRange checked(std::int64_t lo, std::int64_t hi);
  std::int64_t size() const { return hi - lo + 1; }
};

/// Horadam values w_first..w_last computed in a single pass (backward solve
/// w_{n-2} = (p w_{n-1} - w_n) / q below zero), plus the windowed lifts.
class HoradamTable {
 public:
  /// Throws NegativeIndexWithZeroQ if first < 0 and q = 0.
  HoradamTable(const HoradamParams& params, std::int64_t first, std::int64_t last);

  /// Table wide enough for every hybrid-quaternion lift at n in range.
  static HoradamTable for_lifts(const HoradamParams& params, IndexRange range) {
    return HoradamTable(params, range.lo, range.hi + 6);
  }

  std::int64_t first() const { return first_; }
  std::int64_t last() const { return first_ + static_cast<std::int64_t>(values_.size()) - 1; }

  const Rational& at(std::int64_t n) const;

  /// w_n + hi w_{n+1} + eps w_{n+2} + hh w_{n+3}.
  Hybrid<Rational> hybrid(std::int64_t n) const;
  /// w_n + i w_{n+1} + j w_{n+2} + k w_{n+3}.
  Quaternion<Rational> quaternion(std::int64_t n) const;
  /// hybrid(n) + i hybrid(n+1) + j hybrid(n+2) + k hybrid(n+3).
  HybridQuaternion<Rational> hybrid_quaternion(std::int64_t n) const;

 private:
  std::int64_t first_;
  std::vector<Rational> values_;
};

Rational horadam(const HoradamParams& params, std::int64_t n);
Hybrid<Rational> lift_hybrid(const HoradamParams& params, std::int64_t n);
Quaternion<Rational> lift_quaternion(const HoradamParams& params, std::int64_t n);
HybridQuaternion<Rational> lift_hybrid_quaternion(const HoradamParams& params, std::int64_t n);

/// Closed-form ingredients over Q(sqrt(p^2 - 4q)).
struct BinetData {
  QuadExt alpha, beta;
  QuadExt a, b;  // A = (w1 - w0 beta)/(alpha - beta), B = (w0 alpha - w1)/(alpha - beta)
  Hybrid<QuadExt> alpha_star, beta_star;           // 1 + hi x + eps x^2 + hh x^3
  Quaternion<QuadExt> alpha_under, beta_under;     // 1 + i x + j x^2 + k x^3
};

Hybrid<QuadExt> hybrid_powers(const QuadExt& x);
Quaternion<QuadExt> quaternion_powers(const QuadExt& x);

/// Throws RepeatedRoot / RationalRoots.
BinetData binet_data(const HoradamParams& params);

QuadExt binet_scalar(const BinetData& data, std::int64_t n);
Hybrid<QuadExt> binet_hybrid(const BinetData& data, std::int64_t n);
Quaternion<QuadExt> binet_quaternion(const BinetData& data, std::int64_t n);
HybridQuaternion<QuadExt> binet_hybrid_quaternion(const BinetData& data, std::int64_t n);

inline QuadExt binet_scalar(const HoradamParams& p, std::int64_t n) { return binet_scalar(binet_data(p), n); }
inline Hybrid<QuadExt> binet_hybrid(const HoradamParams& p, std::int64_t n) { return binet_hybrid(binet_data(p), n); }
inline Quaternion<QuadExt> binet_quaternion(const HoradamParams& p, std::int64_t n) {
  return binet_quaternion(binet_data(p), n);
}
inline HybridQuaternion<QuadExt> binet_hybrid_quaternion(const HoradamParams& p, std::int64_t n) {
  return binet_hybrid_quaternion(binet_data(p), n);
}

}  // namespace hhq
