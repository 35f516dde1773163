#include "hhq/sequences.hpp"

#include <algorithm>
#include <array>

#include "hhq/error.hpp"

namespace hhq {

std::string HoradamParams::str() const {
  return "w(" + w0.str() + "," + w1.str() + ";" + p.str() + "," + q.str() + ")";
}

HoradamParams HoradamParams::parse(std::string_view text) {
  std::array<Rational, 4> v;
  std::size_t k = 0;
  while (true) {
    auto comma = text.find(',');
    if (k == 4) throw Error(ErrorKind::Parse, "expected exactly four parameters w0,w1,p,q");
    std::string_view field = text.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    v[k++] = Rational::parse(field);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (k != 4) throw Error(ErrorKind::Parse, "expected exactly four parameters w0,w1,p,q");
  return {v[0], v[1], v[2], v[3]};
}

namespace {

struct RegistryEntry {
  SequenceKind kind;
  std::string_view name;
  std::int64_t w0, w1, p, q;  // p, q unused for the generalized families
};

// The named Horadam instantiations, as listed (including the "Fermat" entry
// w(1,3;3,-2), which is not the classical 2^(2^n)+1).
constexpr std::array<RegistryEntry, 10> kRegistry = {{
    {SequenceKind::GeneralizedFibonacci, "generalized-fibonacci", 0, 1, 0, 0},
    {SequenceKind::GeneralizedLucas, "generalized-lucas", 2, 1, 0, 0},
    {SequenceKind::Fibonacci, "fibonacci", 0, 1, 1, -1},
    {SequenceKind::Lucas, "lucas", 2, 1, 1, -1},
    {SequenceKind::Pell, "pell", 0, 1, 2, -1},
    {SequenceKind::PellLucas, "pell-lucas", 2, 2, 2, -1},
    {SequenceKind::Jacobsthal, "jacobsthal", 0, 1, 1, -2},
    {SequenceKind::JacobsthalLucas, "jacobsthal-lucas", 2, 1, 1, -2},
    {SequenceKind::Mersenne, "mersenne", 0, 1, 3, 2},
    {SequenceKind::Fermat, "fermat", 1, 3, 3, -2},
}};

const RegistryEntry& entry(SequenceKind kind) {
  return *std::find_if(kRegistry.begin(), kRegistry.end(), [&](const auto& e) { return e.kind == kind; });
}

bool generalized(SequenceKind kind) {
  return kind == SequenceKind::GeneralizedFibonacci || kind == SequenceKind::GeneralizedLucas;
}

}  // namespace

SequenceId::SequenceId(SequenceKind kind, Rational p, Rational q) : kind_(kind) {
  if (generalized(kind)) {
    p_ = std::move(p);
    q_ = std::move(q);
  }
}

HoradamParams SequenceId::params() const {
  const auto& e = entry(kind_);
  if (generalized(kind_)) return {e.w0, e.w1, p_, q_};
  return {e.w0, e.w1, e.p, e.q};
}

std::string SequenceId::name() const {
  std::string n(entry(kind_).name);
  if (generalized(kind_)) n += "(" + p_.str() + "," + q_.str() + ")";
  return n;
}

SequenceId SequenceId::parse(std::string_view text) {
  auto paren = text.find('(');
  std::string_view base = text.substr(0, paren);
  for (const auto& e : kRegistry) {
    if (e.name != base) continue;
    if (!generalized(e.kind)) {
      if (paren != std::string_view::npos) break;
      return SequenceId(e.kind);
    }
    if (paren == std::string_view::npos || text.back() != ')') break;
    std::string_view args = text.substr(paren + 1, text.size() - paren - 2);
    auto comma = args.find(',');
    if (comma == std::string_view::npos) break;
    return SequenceId(e.kind, Rational::parse(args.substr(0, comma)), Rational::parse(args.substr(comma + 1)));
  }
  throw Error(ErrorKind::Parse, "unknown sequence '" + std::string(text) + "'");
}

std::vector<SequenceId> registry(const Rational& p, const Rational& q) {
  std::vector<SequenceId> out;
  for (const auto& e : kRegistry) out.emplace_back(e.kind, p, q);
  return out;
}

IndexRange IndexRange::checked(std::int64_t lo, std::int64_t hi) {
  if (lo > hi)
    throw Error(ErrorKind::EmptyRange, "empty range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return {lo, hi};
}

HoradamTable::HoradamTable(const HoradamParams& params, std::int64_t first, std::int64_t last) : first_(first) {
  if (first > last) throw Error(ErrorKind::EmptyRange, "empty Horadam window");
  if (first < 0 && params.q.is_zero())
    throw Error(ErrorKind::NegativeIndexWithZeroQ, "negative Horadam index requires q != 0");

  std::int64_t lo = std::min<std::int64_t>(first, 0);
  std::int64_t hi = std::max<std::int64_t>(last, 1);
  std::vector<Rational> all(static_cast<std::size_t>(hi - lo + 1));
  auto slot = [&](std::int64_t n) -> Rational& { return all[static_cast<std::size_t>(n - lo)]; };

  slot(0) = params.w0;
  slot(1) = params.w1;
  for (std::int64_t n = 2; n <= hi; ++n) slot(n) = params.p * slot(n - 1) - params.q * slot(n - 2);
  for (std::int64_t n = -1; n >= lo; --n) slot(n) = (params.p * slot(n + 1) - slot(n + 2)) / params.q;

  values_.assign(all.begin() + (first - lo), all.begin() + (last - lo) + 1);
}

const Rational& HoradamTable::at(std::int64_t n) const {
  if (n < first_ || n > last())
    throw std::out_of_range("index " + std::to_string(n) + " outside Horadam table [" + std::to_string(first_) +
                            ", " + std::to_string(last()) + "]");
  return values_[static_cast<std::size_t>(n - first_)];
}

Hybrid<Rational> HoradamTable::hybrid(std::int64_t n) const { return {at(n), at(n + 1), at(n + 2), at(n + 3)}; }

Quaternion<Rational> HoradamTable::quaternion(std::int64_t n) const {
  return {at(n), at(n + 1), at(n + 2), at(n + 3)};
}

HybridQuaternion<Rational> HoradamTable::hybrid_quaternion(std::int64_t n) const {
  return HybridQuaternion<Rational>::from_quaternion_basis({hybrid(n), hybrid(n + 1), hybrid(n + 2), hybrid(n + 3)});
}

Rational horadam(const HoradamParams& params, std::int64_t n) { return HoradamTable(params, n, n).at(n); }

Hybrid<Rational> lift_hybrid(const HoradamParams& params, std::int64_t n) {
  return HoradamTable(params, n, n + 3).hybrid(n);
}

Quaternion<Rational> lift_quaternion(const HoradamParams& params, std::int64_t n) {
  return HoradamTable(params, n, n + 3).quaternion(n);
}

HybridQuaternion<Rational> lift_hybrid_quaternion(const HoradamParams& params, std::int64_t n) {
  return HoradamTable(params, n, n + 6).hybrid_quaternion(n);
}

Hybrid<QuadExt> hybrid_powers(const QuadExt& x) { return {QuadExt(1), x, x * x, x * x * x}; }

Quaternion<QuadExt> quaternion_powers(const QuadExt& x) { return {QuadExt(1), x, x * x, x * x * x}; }

BinetData binet_data(const HoradamParams& params) {
  auto [alpha, beta] = make_quad_roots(params.p, params.q);
  QuadExt diff = alpha - beta;
  QuadExt w0(params.w0), w1(params.w1);
  BinetData d;
  d.a = (w1 - w0 * beta) / diff;
  d.b = (w0 * alpha - w1) / diff;
  d.alpha_star = hybrid_powers(alpha);
  d.beta_star = hybrid_powers(beta);
  d.alpha_under = quaternion_powers(alpha);
  d.beta_under = quaternion_powers(beta);
  d.alpha = std::move(alpha);
  d.beta = std::move(beta);
  return d;
}

QuadExt binet_scalar(const BinetData& d, std::int64_t n) { return d.a * pow(d.alpha, n) + d.b * pow(d.beta, n); }

Hybrid<QuadExt> binet_hybrid(const BinetData& d, std::int64_t n) {
  return (d.a * pow(d.alpha, n)) * d.alpha_star + (d.b * pow(d.beta, n)) * d.beta_star;
}

Quaternion<QuadExt> binet_quaternion(const BinetData& d, std::int64_t n) {
  return (d.a * pow(d.alpha, n)) * d.alpha_under + (d.b * pow(d.beta, n)) * d.beta_under;
}

HybridQuaternion<QuadExt> binet_hybrid_quaternion(const BinetData& d, std::int64_t n) {
  using HQ = HybridQuaternion<QuadExt>;
  HQ alpha_part = HQ::from_hybrid(d.alpha_star) * HQ::from_quaternion(d.alpha_under);
  HQ beta_part = HQ::from_hybrid(d.beta_star) * HQ::from_quaternion(d.beta_under);
  return (d.a * pow(d.alpha, n)) * alpha_part + (d.b * pow(d.beta, n)) * beta_part;
}

}  // namespace hhq
