#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hhq/hybrid.hpp"
#include "hhq/quaternion.hpp"
#include "hhq/scalar.hpp"

namespace hhq {

/// Flat coefficient slot of u (x) v: quaternion unit major, hybrid unit minor,
/// i.e. (1,1),(1,hi),(1,eps),(1,hh),(i,1),...,(k,hh).
constexpr int hq_index(int u, int v) { return 4 * u + v; }

struct StructureTerm {
  int target = 0;
  int sign = 0;
};

/// Product of two basis elements: at most two signed basis elements because a
/// hybrid unit product has at most two terms and a quaternion unit product one.
struct StructureEntry {
  std::array<StructureTerm, 2> terms{};
  int count = 0;
};

using StructureTable = std::array<StructureEntry, 256>;

/// (u (x) v)(u' (x) v') = (u u') (x) (v v'): the Kronecker product of the two
/// unit tables. Entry index is 16 * left + right.
constexpr StructureTable make_structure_constants() {
  StructureTable table{};
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      for (int u2 = 0; u2 < 4; ++u2)
        for (int v2 = 0; v2 < 4; ++v2) {
          StructureEntry e;
          for (int qu = 0; qu < 4; ++qu) {
            int qs = kQuaternionUnitProducts[u][u2][qu];
            if (qs == 0) continue;
            for (int hv = 0; hv < 4; ++hv) {
              int hs = kHybridUnitProducts[v][v2][hv];
              if (hs == 0) continue;
              e.terms[e.count++] = {hq_index(qu, hv), qs * hs};
            }
          }
          table[16 * hq_index(u, v) + hq_index(u2, v2)] = e;
        }
  return table;
}

inline constexpr StructureTable kStructureConstants = make_structure_constants();

/// Element of the 16-dimensional algebra H (x) K, stored as flat coefficients.
/// Quaternion units commute with hybrid units.
template <Scalar S>
class HybridQuaternion {
 public:
  HybridQuaternion() = default;
  explicit HybridQuaternion(std::array<S, 16> coeffs) : c_(std::move(coeffs)) {}

  static HybridQuaternion unit(QuaternionUnit u, HybridUnit v) {
    HybridQuaternion x;
    x.c_[hq_index(static_cast<int>(u), static_cast<int>(v))] = S(1);
    return x;
  }
  static HybridQuaternion from_scalar(const S& s) {
    HybridQuaternion x;
    x.c_[0] = s;
    return x;
  }
  /// z (x) 1 is placed on quaternion unit 1.
  static HybridQuaternion from_hybrid(const Hybrid<S>& z) { return from_quaternion_basis({z, {}, {}, {}}); }
  /// q placed on hybrid unit 1.
  static HybridQuaternion from_quaternion(const Quaternion<S>& q) { return from_hybrid_basis({q, {}, {}, {}}); }

  /// h0 + i h1 + j h2 + k h3 with hybrid coefficients.
  static HybridQuaternion from_quaternion_basis(const std::array<Hybrid<S>, 4>& h) {
    HybridQuaternion x;
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v) x.c_[hq_index(u, v)] = h[u][v];
    return x;
  }
  /// q0 + hi q1 + eps q2 + hh q3 with quaternion coefficients.
  static HybridQuaternion from_hybrid_basis(const std::array<Quaternion<S>, 4>& q) {
    HybridQuaternion x;
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v) x.c_[hq_index(u, v)] = q[v][u];
    return x;
  }

  std::array<Hybrid<S>, 4> as_quaternion_basis() const {
    std::array<Hybrid<S>, 4> h;
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v) h[u][v] = c_[hq_index(u, v)];
    return h;
  }
  std::array<Quaternion<S>, 4> as_hybrid_basis() const {
    std::array<Quaternion<S>, 4> q;
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v) q[v][u] = c_[hq_index(u, v)];
    return q;
  }

  const std::array<S, 16>& coeffs() const { return c_; }
  const S& operator()(int u, int v) const { return c_[hq_index(u, v)]; }
  S& operator()(int u, int v) { return c_[hq_index(u, v)]; }

  bool is_zero() const {
    for (const auto& s : c_)
      if (!s.is_zero()) return false;
    return true;
  }

  /// Negates coefficients on i, j, k.
  HybridQuaternion conj_quaternion() const { return flip(true, false); }
  /// Negates coefficients on hi, eps, hh.
  HybridQuaternion conj_hybrid() const { return flip(false, true); }
  /// Both; coefficients with exactly one non-trivial unit change sign.
  HybridQuaternion conj_total() const { return flip(true, true); }

  template <class F>
  auto map(F&& f) const {
    using T = decltype(f(c_[0]));
    std::array<T, 16> out;
    for (int k = 0; k < 16; ++k) out[k] = f(c_[k]);
    return HybridQuaternion<T>(std::move(out));
  }

  /// "coeff*u*v" terms in canonical order with zero terms omitted; "0" when empty.
  std::string str() const {
    std::vector<std::pair<const S*, std::string>> terms;
    for (int k = 0; k < 16; ++k) terms.emplace_back(&c_[k], unit_name(k));
    return detail::render_terms<S>(terms);
  }

  static HybridQuaternion parse(std::string_view text) {
    std::vector<std::string> units;
    for (int k = 0; k < 16; ++k) units.push_back(unit_name(k));
    auto c = detail::parse_terms<S>(text, units);
    HybridQuaternion x;
    for (int k = 0; k < 16; ++k) x.c_[k] = c[k];
    return x;
  }

  static std::string unit_name(int slot) {
    return std::string(kQuaternionUnitNames[slot / 4]) + "*" + std::string(kHybridUnitNames[slot % 4]);
  }

  friend bool operator==(const HybridQuaternion&, const HybridQuaternion&) = default;

  HybridQuaternion& operator+=(const HybridQuaternion& o) {
    for (int k = 0; k < 16; ++k) c_[k] += o.c_[k];
    return *this;
  }
  HybridQuaternion& operator-=(const HybridQuaternion& o) {
    for (int k = 0; k < 16; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend HybridQuaternion operator+(HybridQuaternion a, const HybridQuaternion& b) { return a += b; }
  friend HybridQuaternion operator-(HybridQuaternion a, const HybridQuaternion& b) { return a -= b; }
  friend HybridQuaternion operator-(HybridQuaternion a) {
    for (auto& s : a.c_) s = -s;
    return a;
  }
  friend HybridQuaternion operator*(const S& s, HybridQuaternion a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend HybridQuaternion operator*(HybridQuaternion a, const S& s) {
    for (auto& x : a.c_) x = x * s;
    return a;
  }

  /// Product through the structure-constant table.
  friend HybridQuaternion operator*(const HybridQuaternion& x, const HybridQuaternion& y) {
    HybridQuaternion r;
    for (int p = 0; p < 16; ++p) {
      if (x.c_[p].is_zero()) continue;
      for (int q = 0; q < 16; ++q) {
        if (y.c_[q].is_zero()) continue;
        const StructureEntry& e = kStructureConstants[16 * p + q];
        if (e.count == 0) continue;
        S prod = x.c_[p] * y.c_[q];
        for (int t = 0; t < e.count; ++t) {
          S& slot = r.c_[e.terms[t].target];
          if (e.terms[t].sign > 0)
            slot += prod;
          else
            slot -= prod;
        }
      }
    }
    return r;
  }

 private:
  HybridQuaternion flip(bool quaternion, bool hybrid) const {
    HybridQuaternion r = *this;
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v) {
        bool negate = (quaternion && u != 0) != (hybrid && v != 0);
        if (negate) r.c_[hq_index(u, v)] = -r.c_[hq_index(u, v)];
      }
    return r;
  }

  std::array<S, 16> c_{};
};

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const HybridQuaternion<S>& x) {
  return os << x.str();
}

// Alternative product presentations. Each keeps the left operand's
// coefficient on the left, since the coefficients do not commute.

/// Q = q0 + q1 hi + q2 eps + q3 hh with quaternion coefficients.
template <Scalar S>
HybridQuaternion<S> mul_hybrid_unit_form(const HybridQuaternion<S>& x, const HybridQuaternion<S>& y) {
  auto [q0, q1, q2, q3] = x.as_hybrid_basis();
  auto [p0, p1, p2, p3] = y.as_hybrid_basis();
  return HybridQuaternion<S>::from_hybrid_basis({
      q0 * p0 - q1 * p1 + q3 * p3 + q1 * p2 + q2 * p1,
      q0 * p1 + q1 * p0 + q1 * p3 - q3 * p1,
      q0 * p2 + q2 * p0 + q1 * p3 - q3 * p1 + q3 * p2 - q2 * p3,
      q0 * p3 + q3 * p0 + q2 * p1 - q1 * p2,
  });
}

/// Q = z0 + z1 i + z2 j + z3 k with hybrid coefficients.
template <Scalar S>
HybridQuaternion<S> mul_quaternion_unit_form(const HybridQuaternion<S>& x, const HybridQuaternion<S>& y) {
  auto [z0, z1, z2, z3] = x.as_quaternion_basis();
  auto [t0, t1, t2, t3] = y.as_quaternion_basis();
  return HybridQuaternion<S>::from_quaternion_basis({
      z0 * t0 - z1 * t1 - z2 * t2 - z3 * t3,
      z1 * t0 + z0 * t1 - z3 * t2 + z2 * t3,
      z2 * t0 + z3 * t1 + z0 * t2 - z1 * t3,
      z3 * t0 - z2 * t1 + z1 * t2 + z0 * t3,
  });
}

template <Scalar S>
using HybridTriple = std::array<Hybrid<S>, 3>;

/// Q = S_Q + V_Q: the hybrid coefficient of quaternion unit 1, and those of i, j, k.
template <Scalar S>
struct ScalarVectorForm {
  Hybrid<S> scalar_part;
  HybridTriple<S> vector_part;

  HybridQuaternion<S> reassemble() const {
    return HybridQuaternion<S>::from_quaternion_basis({scalar_part, vector_part[0], vector_part[1], vector_part[2]});
  }
};

template <Scalar S>
ScalarVectorForm<S> scalar_vector_form(const HybridQuaternion<S>& x) {
  auto h = x.as_quaternion_basis();
  return {h[0], {h[1], h[2], h[3]}};
}

/// V1 W1 + V2 W2 + V3 W3, each product in left-to-right order.
template <Scalar S>
Hybrid<S> hq_dot(const HybridTriple<S>& v, const HybridTriple<S>& w) {
  return v[0] * w[0] + v[1] * w[1] + v[2] * w[2];
}

/// Formal cross product with V's coefficient always on the left.
template <Scalar S>
HybridTriple<S> hq_cross(const HybridTriple<S>& v, const HybridTriple<S>& w) {
  return {v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2], v[0] * w[1] - v[1] * w[0]};
}

/// S_Q S_P - <V_Q, V_P> + S_Q V_P + V_Q S_P + V_Q x V_P.
///
/// The mixed term V_Q S_P multiplies each vector coefficient of Q on the left
/// of S_P; writing it S_P V_Q with S_P on the left gives a different (wrong)
/// product because hybrid numbers do not commute.
template <Scalar S>
HybridQuaternion<S> mul_via_scalar_vector(const HybridQuaternion<S>& x, const HybridQuaternion<S>& y) {
  auto fx = scalar_vector_form(x);
  auto fy = scalar_vector_form(y);
  auto cross = hq_cross(fx.vector_part, fy.vector_part);
  ScalarVectorForm<S> out;
  out.scalar_part = fx.scalar_part * fy.scalar_part - hq_dot(fx.vector_part, fy.vector_part);
  for (int k = 0; k < 3; ++k)
    out.vector_part[k] = fx.scalar_part * fy.vector_part[k] + fx.vector_part[k] * fy.scalar_part + cross[k];
  return out.reassemble();
}

/// Coefficientwise Rational -> QuadExt embedding.
inline HybridQuaternion<QuadExt> to_quad(const HybridQuaternion<Rational>& x) {
  return x.map([](const Rational& r) { return QuadExt(r); });
}

/// Rational parts; throws Error(InexactValue) if any surd part is nonzero.
inline HybridQuaternion<Rational> to_rational(const HybridQuaternion<QuadExt>& x) {
  return x.map([](const QuadExt& q) {
    if (!q.is_rational()) throw Error(ErrorKind::InexactValue, "coefficient " + q.str() + " is irrational");
    return q.rational_part();
  });
}

}  // namespace hhq
