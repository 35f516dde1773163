#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "hhq/hybrid.hpp"
#include "hhq/scalar.hpp"

namespace hhq {

enum class QuaternionUnit : int { One = 0, I = 1, J = 2, K = 3 };

/// kQuaternionUnitProducts[a][b] holds the (1, i, j, k) coefficients of e_a * e_b:
/// i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i, ki = -ik = j.
inline constexpr UnitProductTable kQuaternionUnitProducts = {{
    //        1               i                j                k
    {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},     // 1
    {{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}},   // i
    {{{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}}},   // j
    {{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}},   // k
}};

inline constexpr std::array<std::string_view, 4> kQuaternionUnitNames = {"1", "i", "j", "k"};

/// Quaternion z0 + z1 i + z2 j + z3 k over the scalar ring S.
template <Scalar S>
struct Quaternion {
  S z0{}, z1{}, z2{}, z3{};

  static Quaternion unit(QuaternionUnit u) {
    Quaternion q;
    q[static_cast<int>(u)] = S(1);
    return q;
  }

  S& operator[](int k) { return k == 0 ? z0 : k == 1 ? z1 : k == 2 ? z2 : z3; }
  const S& operator[](int k) const { return k == 0 ? z0 : k == 1 ? z1 : k == 2 ? z2 : z3; }

  bool is_zero() const { return z0.is_zero() && z1.is_zero() && z2.is_zero() && z3.is_zero(); }

  Quaternion conj() const { return {z0, -z1, -z2, -z3}; }

  /// z0^2 + z1^2 + z2^2 + z3^2, the real part of q * conj(q).
  S norm_sq() const { return z0 * z0 + z1 * z1 + z2 * z2 + z3 * z3; }

  std::string str() const { return detail::render_terms<S>({{&z0, ""}, {&z1, "i"}, {&z2, "j"}, {&z3, "k"}}); }

  static Quaternion parse(std::string_view text) {
    auto c = detail::parse_terms<S>(text, {"", "i", "j", "k"});
    return {c[0], c[1], c[2], c[3]};
  }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  Quaternion& operator+=(const Quaternion& o) {
    z0 = z0 + o.z0;
    z1 = z1 + o.z1;
    z2 = z2 + o.z2;
    z3 = z3 + o.z3;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    z0 = z0 - o.z0;
    z1 = z1 - o.z1;
    z2 = z2 - o.z2;
    z3 = z3 - o.z3;
    return *this;
  }
  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) { return {-a.z0, -a.z1, -a.z2, -a.z3}; }

  friend Quaternion operator*(const S& s, const Quaternion& q) { return {s * q.z0, s * q.z1, s * q.z2, s * q.z3}; }
  friend Quaternion operator*(const Quaternion& q, const S& s) { return {q.z0 * s, q.z1 * s, q.z2 * s, q.z3 * s}; }

  /// Hamilton product.
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    const auto& [a, b, c, d] = x;
    const auto& [e, f, g, h] = y;
    return {
        a * e - b * f - c * g - d * h,
        a * f + b * e + c * h - d * g,
        a * g - b * h + c * e + d * f,
        a * h + b * g - c * f + d * e,
    };
  }
};

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Quaternion<S>& q) {
  return os << q.str();
}

}  // namespace hhq
