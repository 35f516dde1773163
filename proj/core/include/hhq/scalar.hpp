#pragma once

#include <concepts>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hhq/error.hpp"
#include "hhq/quad_ext.hpp"
#include "hhq/rational.hpp"

namespace hhq {

/// Commutative scalar ring the algebras are instantiated over.
template <class S>
concept Scalar = std::regular<S> && requires(const S& a, const S& b, S& acc) {
  { a + b } -> std::convertible_to<S>;
  acc += b;
  acc -= b;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  S(1);
};

namespace detail {

inline std::string coefficient_str(const Rational& r) { return r.str(); }
inline std::string coefficient_str(const QuadExt& x) { return x.bound() ? "(" + x.str() + ")" : x.str(); }

template <class S>
S parse_coefficient(std::string_view text);

template <>
inline Rational parse_coefficient<Rational>(std::string_view text) {
  return Rational::parse(text);
}

template <>
inline QuadExt parse_coefficient<QuadExt>(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  return QuadExt::parse(text);
}

/// Joins "coeff*unit" terms with " + ", skipping zero coefficients. An empty
/// unit name means the term is rendered as the bare coefficient.
template <Scalar S>
std::string render_terms(const std::vector<std::pair<const S*, std::string>>& terms) {
  std::string out;
  for (const auto& [coeff, unit] : terms) {
    if (coeff->is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coefficient_str(*coeff);
    if (!unit.empty()) out += "*" + unit;
  }
  return out.empty() ? "0" : out;
}

/// Splits on `sep` outside parentheses.
inline std::vector<std::string_view> split_top_level(std::string_view text, std::string_view sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '(') ++depth;
    if (text[k] == ')') --depth;
    if (depth == 0 && text.substr(k, sep.size()) == sep) {
      parts.push_back(text.substr(start, k - start));
      k += sep.size() - 1;
      start = k + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

/// Inverse of render_terms. `units` lists the unit names in canonical order;
/// the returned vector has one coefficient per unit. Repeated units accumulate.
template <Scalar S>
std::vector<S> parse_terms(std::string_view text, const std::vector<std::string>& units) {
  std::vector<S> coeffs(units.size());
  if (text == "0") return coeffs;
  for (auto term : split_top_level(text, " + ")) {
    auto pieces = split_top_level(term, "*");
    if (pieces.empty() || pieces.front().empty())
      throw Error(ErrorKind::Parse, "empty term in '" + std::string(text) + "'");
    std::string unit;
    for (std::size_t k = 1; k < pieces.size(); ++k) {
      if (k > 1) unit += "*";
      unit += pieces[k];
    }
    std::size_t slot = units.size();
    for (std::size_t k = 0; k < units.size(); ++k)
      if (units[k] == unit) slot = k;
    if (slot == units.size()) throw Error(ErrorKind::Parse, "unknown unit '" + unit + "' in '" + std::string(text) + "'");
    coeffs[slot] = coeffs[slot] + parse_coefficient<S>(pieces.front());
  }
  return coeffs;
}

}  // namespace detail
}  // namespace hhq
