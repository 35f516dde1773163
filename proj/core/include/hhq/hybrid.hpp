#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>

#include "hhq/scalar.hpp"

namespace hhq {

/// Hybrid units in canonical order: 1, hi (i^2 = -1), eps (eps^2 = 0), hh (h^2 = 1).
enum class HybridUnit : int { One = 0, I = 1, Eps = 2, H = 3 };

using UnitProductTable = std::array<std::array<std::array<int, 4>, 4>, 4>;

/// kHybridUnitProducts[a][b] holds the (1, hi, eps, hh) coefficients of e_a * e_b.
inline constexpr UnitProductTable kHybridUnitProducts = {{
    //        1               hi               eps              hh
    {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},      // 1
    {{{0, 1, 0, 0}, {-1, 0, 0, 0}, {1, 0, 0, -1}, {0, 1, 1, 0}}},    // hi: -1, 1-h, eps+i
    {{{0, 0, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, -1, 0}}},     // eps: 1+h, 0, -eps
    {{{0, 0, 0, 1}, {0, -1, -1, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}}},    // hh: -eps-i, eps, 1
}};

inline constexpr std::array<std::string_view, 4> kHybridUnitNames = {"1", "hi", "eps", "hh"};

/// Hybrid number re + hi*i + eps*e + hh*h over the scalar ring S.
template <Scalar S>
struct Hybrid {
  S re{}, hi{}, eps{}, hh{};

  static Hybrid unit(HybridUnit u) {
    Hybrid z;
    z[static_cast<int>(u)] = S(1);
    return z;
  }

  S& operator[](int k) { return k == 0 ? re : k == 1 ? hi : k == 2 ? eps : hh; }
  const S& operator[](int k) const { return k == 0 ? re : k == 1 ? hi : k == 2 ? eps : hh; }

  bool is_zero() const { return re.is_zero() && hi.is_zero() && eps.is_zero() && hh.is_zero(); }

  /// z^c = a - b hi - c eps - d hh.
  Hybrid conj() const { return {re, -hi, -eps, -hh}; }

  /// z z^c = a^2 + (b - c)^2 - c^2 - d^2, signed; no square root is taken.
  S character() const {
    S bc = hi - eps;
    return re * re + bc * bc - eps * eps - hh * hh;
  }

  /// "a + b*hi + c*eps + d*hh", zero terms omitted.
  std::string str() const {
    return detail::render_terms<S>({{&re, ""}, {&hi, "hi"}, {&eps, "eps"}, {&hh, "hh"}});
  }

  static Hybrid parse(std::string_view text) {
    auto c = detail::parse_terms<S>(text, {"", "hi", "eps", "hh"});
    return {c[0], c[1], c[2], c[3]};
  }

  friend bool operator==(const Hybrid&, const Hybrid&) = default;

  Hybrid& operator+=(const Hybrid& o) {
    re = re + o.re;
    hi = hi + o.hi;
    eps = eps + o.eps;
    hh = hh + o.hh;
    return *this;
  }
  Hybrid& operator-=(const Hybrid& o) {
    re = re - o.re;
    hi = hi - o.hi;
    eps = eps - o.eps;
    hh = hh - o.hh;
    return *this;
  }
  friend Hybrid operator+(Hybrid a, const Hybrid& b) { return a += b; }
  friend Hybrid operator-(Hybrid a, const Hybrid& b) { return a -= b; }
  friend Hybrid operator-(const Hybrid& a) { return {-a.re, -a.hi, -a.eps, -a.hh}; }

  friend Hybrid operator*(const S& s, const Hybrid& z) { return {s * z.re, s * z.hi, s * z.eps, s * z.hh}; }
  friend Hybrid operator*(const Hybrid& z, const S& s) { return {z.re * s, z.hi * s, z.eps * s, z.hh * s}; }

  /// Closed-form expansion of the unit table over commuting scalars.
  friend Hybrid operator*(const Hybrid& x, const Hybrid& y) {
    const auto& [a, b, c, d] = x;
    const auto& [a2, b2, c2, d2] = y;
    return {
        a * a2 - b * b2 + b * c2 + c * b2 + d * d2,
        a * b2 + b * a2 + b * d2 - d * b2,
        a * c2 + c * a2 + b * d2 - d * b2 - c * d2 + d * c2,
        a * d2 + d * a2 - b * c2 + c * b2,
    };
  }
};

/// Bilinear extension of a 4x4 unit product table; the reference path the
/// closed-form products are checked against.
template <class Algebra>
Algebra mul_by_table(const UnitProductTable& table, const Algebra& x, const Algebra& y) {
  Algebra r;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      if (x[p].is_zero() || y[q].is_zero()) continue;
      auto prod = x[p] * y[q];
      for (int t = 0; t < 4; ++t) {
        int s = table[p][q][t];
        if (s == 1) r[t] = r[t] + prod;
        if (s == -1) r[t] = r[t] - prod;
      }
    }
  return r;
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Hybrid<S>& z) {
  return os << z.str();
}

}  // namespace hhq
