#include "hhq/identity_audit.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <json.hpp>

#include "hhq/error.hpp"

namespace hhq {

using HQ = HybridQuaternion<Rational>;
using HQx = HybridQuaternion<QuadExt>;

std::string_view to_string(AuditStatus status) {
  switch (status) {
    case AuditStatus::Verified: return "VERIFIED";
    case AuditStatus::Refuted: return "REFUTED";
    case AuditStatus::Unevaluable: return "UNEVALUABLE";
  }
  return "UNKNOWN";
}

std::string Characteristic::str() const {
  auto term = [](const Rational& c, std::string_view var) {
    std::string s = c.sign() < 0 ? "-" : "+";
    Rational a = c.sign() < 0 ? -c : c;
    if (a != Rational(1) || var.empty()) s += a.str();
    return s + std::string(var);
  };
  return "x^2" + term(-p, "x") + term(q, "");
}

namespace {

const HoradamParams kFibonacci = SequenceId(SequenceKind::Fibonacci).params();
const HoradamParams kLucas = SequenceId(SequenceKind::Lucas).params();

// Every relation below reaches at most 4 below and 12 above n.
HoradamTable relation_table(const HoradamParams& params, IndexRange range) {
  return HoradamTable(params, range.lo - 4, range.hi + 12);
}

template <class Value, class Lhs, class... Rhs>
IdentityReport evaluate(std::string identity, std::string sequence, IndexRange range, Lhs lhs, Rhs... rhs) {
  IdentityReport report{std::move(identity), std::move(sequence), range, AuditStatus::Verified, std::nullopt,
                        std::nullopt};
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    Value left = lhs(n);
    for (const auto& right_fn : {std::function<Value(std::int64_t)>(rhs)...}) {
      Value right = right_fn(n);
      Value residual = left - right;
      if (!residual.is_zero()) {
        report.status = AuditStatus::Refuted;
        report.first_failure = FailureWitness{n, left.str(), right.str(), residual.str()};
        return report;
      }
    }
  }
  return report;
}

IdentityReport unevaluable(std::string identity, std::string sequence, IndexRange range, const Error& e) {
  return {std::move(identity), std::move(sequence), range, AuditStatus::Unevaluable, std::nullopt,
          std::string(to_string(e.kind()))};
}

HQ unit(QuaternionUnit u, HybridUnit v = HybridUnit::One) { return HQ::unit(u, v); }
HQ hybrid_unit(HybridUnit v) { return HQ::unit(QuaternionUnit::One, v); }

Rational sign_power(std::int64_t n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

IdentityReport binet_report(const HoradamParams& params, const std::string& label, IndexRange range) {
  BinetData data;
  try {
    data = binet_data(params);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RationalRoots && e.kind() != ErrorKind::RepeatedRoot) throw;
    return unevaluable("Thm2.1", label, range, e);
  }
  auto table = HoradamTable::for_lifts(params, range);
  return evaluate<HQx>(
      "Thm2.1", label, range, [&](std::int64_t n) { return to_quad(table.hybrid_quaternion(n)); },
      [&](std::int64_t n) { return binet_hybrid_quaternion(data, n); });
}

// alpha alpha* beta* alpha_ beta_ - beta beta* alpha* beta_ alpha_, factors
// multiplied left to right in the printed order.
HQx cassini_core(const QuadExt& alpha, const QuadExt& beta) {
  HQx a = HQx::from_scalar(alpha), b = HQx::from_scalar(beta);
  HQx as = HQx::from_hybrid(hybrid_powers(alpha)), bs = HQx::from_hybrid(hybrid_powers(beta));
  HQx au = HQx::from_quaternion(quaternion_powers(alpha)), bu = HQx::from_quaternion(quaternion_powers(beta));
  return a * as * bs * au * bu - b * bs * as * bu * au;
}

using Checker = std::function<IdentityReport(IndexRange)>;

struct NamedChecker {
  std::string label;
  Checker run;
};

IdentityReport thm3_1_i(IndexRange range) {
  auto f = relation_table(kFibonacci, range);
  return evaluate<HQ>(
      "Thm3.1.i", "fibonacci", range,
      [&](std::int64_t n) { return f.hybrid_quaternion(n) + f.hybrid_quaternion(n + 1); },
      [&](std::int64_t n) { return f.hybrid_quaternion(n + 2); });
}

IdentityReport thm3_1_ii(IndexRange range) {
  auto f = relation_table(kFibonacci, range);
  auto l = relation_table(kLucas, range);
  return evaluate<HQ>(
      "Thm3.1.ii", "fibonacci", range,
      [&](std::int64_t n) {
        return f.hybrid_quaternion(n) - unit(QuaternionUnit::I) * f.hybrid_quaternion(n + 1) -
               unit(QuaternionUnit::J) * f.hybrid_quaternion(n + 2) -
               unit(QuaternionUnit::K) * f.hybrid_quaternion(n + 3);
      },
      [&](std::int64_t n) {
        return HQ::from_hybrid(f.hybrid(n) + f.hybrid(n + 2) + f.hybrid(n + 4) + f.hybrid(n + 6));
      },
      [&](std::int64_t n) { return HQ::from_hybrid(l.hybrid(n + 1) + l.hybrid(n + 5)); });
}

IdentityReport thm3_1_iii(IndexRange range) {
  auto f = relation_table(kFibonacci, range);
  return evaluate<HQ>(
      "Thm3.1.iii", "fibonacci", range,
      [&](std::int64_t n) {
        return f.hybrid_quaternion(n) - hybrid_unit(HybridUnit::I) * f.hybrid_quaternion(n + 1) -
               hybrid_unit(HybridUnit::Eps) * f.hybrid_quaternion(n + 2) -
               hybrid_unit(HybridUnit::H) * f.hybrid_quaternion(n + 3);
      },
      [&](std::int64_t n) {
        return HQ::from_quaternion(f.quaternion(n) - f.quaternion(n + 2) - Rational(2) * f.quaternion(n + 3) +
                                   f.quaternion(n + 6));
      });
}

IdentityReport thm3_2_i(IndexRange range) {
  auto f = relation_table(kFibonacci, range);
  auto l = relation_table(kLucas, range);
  return evaluate<HQ>(
      "Thm3.2.i", "fibonacci,lucas", range,
      [&](std::int64_t n) { return f.hybrid_quaternion(n - 1) + f.hybrid_quaternion(n + 1); },
      [&](std::int64_t n) { return l.hybrid_quaternion(n); });
}

IdentityReport thm3_2_ii(IndexRange range) {
  auto f = relation_table(kFibonacci, range);
  auto l = relation_table(kLucas, range);
  return evaluate<HQ>(
      "Thm3.2.ii", "fibonacci,lucas", range,
      [&](std::int64_t n) { return f.hybrid_quaternion(n + 2) - f.hybrid_quaternion(n - 2); },
      [&](std::int64_t n) { return l.hybrid_quaternion(n); });
}

IdentityReport thm3_3_i(IndexRange range) {
  auto f = relation_table(kFibonacci, range);
  return evaluate<HQ>(
      "Thm3.3.i", "fibonacci", range,
      [&](std::int64_t n) { return f.hybrid_quaternion(n) + f.hybrid_quaternion(n).conj_quaternion(); },
      [&](std::int64_t n) { return HQ::from_hybrid(Rational(2) * f.hybrid(n)); });
}

IdentityReport thm3_3_ii(IndexRange range) {
  auto f = relation_table(kFibonacci, range);
  return evaluate<HQ>(
      "Thm3.3.ii", "fibonacci", range,
      [&](std::int64_t n) { return f.hybrid_quaternion(n) + f.hybrid_quaternion(n).conj_hybrid(); },
      [&](std::int64_t n) { return HQ::from_quaternion(Rational(2) * f.quaternion(n)); });
}

// -2 F_n - 8 F_{n+1} + 2 (X_{n+1} + X_{n+2} + X_{n+3}), X hat or breve.
IdentityReport thm3_3_iii(IndexRange range, bool hat_reading) {
  auto f = relation_table(kFibonacci, range);
  auto x = [&](std::int64_t m) { return hat_reading ? f.hybrid_quaternion(m) : HQ::from_hybrid(f.hybrid(m)); };
  return evaluate<HQ>(
      hat_reading ? "Thm3.3.iii[hat]" : "Thm3.3.iii[breve]", "fibonacci", range,
      [&](std::int64_t n) { return f.hybrid_quaternion(n) + f.hybrid_quaternion(n).conj_total(); },
      [&](std::int64_t n) {
        return HQ::from_scalar(Rational(-2) * f.at(n) - Rational(8) * f.at(n + 1)) +
               Rational(2) * (x(n + 1) + x(n + 2) + x(n + 3));
      });
}

IdentityReport thm3_4(IndexRange range, bool lucas) {
  auto [alpha, beta] = make_quad_roots(1, -1);
  HQx a = HQx::from_hybrid(hybrid_powers(alpha)) * HQx::from_quaternion(quaternion_powers(alpha));
  HQx b = HQx::from_hybrid(hybrid_powers(beta)) * HQx::from_quaternion(quaternion_powers(beta));
  QuadExt inv_diff = (alpha - beta).inverse();
  auto table = HoradamTable::for_lifts(lucas ? kLucas : kFibonacci, range);
  return evaluate<HQx>(
      lucas ? "Thm3.4.ii" : "Thm3.4.i", lucas ? "lucas" : "fibonacci", range,
      [&](std::int64_t n) { return to_quad(table.hybrid_quaternion(n)); },
      [&](std::int64_t n) {
        HQx sum = a * pow(alpha, n) + (lucas ? b * pow(beta, n) : -(b * pow(beta, n)));
        return lucas ? sum : sum * inv_diff;
      });
}

IdentityReport cassini(IndexRange range, const Characteristic& ch, bool lucas) {
  std::string label = std::string(lucas ? "Thm3.5.C2[" : "Thm3.5.C1[") + ch.str() + "]";
  auto table = HoradamTable(lucas ? kLucas : kFibonacci, range.lo - 1, range.hi + 7);
  auto [alpha, beta] = make_quad_roots(ch.p, ch.q);
  QuadExt diff = alpha - beta;
  // The factor printed as sqrt(5) in C2 is alpha - beta of the characteristic.
  HQx core = lucas ? cassini_core(alpha, beta) * diff : cassini_core(alpha, beta) * diff.inverse();
  return evaluate<HQx>(
      label, lucas ? "lucas" : "fibonacci", range,
      [&](std::int64_t n) {
        HQ x = table.hybrid_quaternion(n);
        return to_quad(table.hybrid_quaternion(n + 1) * table.hybrid_quaternion(n - 1) - x * x);
      },
      [&](std::int64_t n) { return core * QuadExt(sign_power(n)); });
}

std::vector<NamedChecker> checkers() {
  std::vector<NamedChecker> out;
  for (const auto& seq : registry())
    out.push_back({"Thm2.1", [seq](IndexRange r) { return check_binet(seq, r); }});
  out.push_back({"Thm3.1.i", thm3_1_i});
  out.push_back({"Thm3.1.ii", thm3_1_ii});
  out.push_back({"Thm3.1.iii", thm3_1_iii});
  out.push_back({"Thm3.2.i", thm3_2_i});
  out.push_back({"Thm3.2.ii", thm3_2_ii});
  out.push_back({"Thm3.3.i", thm3_3_i});
  out.push_back({"Thm3.3.ii", thm3_3_ii});
  out.push_back({"Thm3.3.iii[hat]", [](IndexRange r) { return thm3_3_iii(r, true); }});
  out.push_back({"Thm3.3.iii[breve]", [](IndexRange r) { return thm3_3_iii(r, false); }});
  out.push_back({"Thm3.4.i", [](IndexRange r) { return thm3_4(r, false); }});
  out.push_back({"Thm3.4.ii", [](IndexRange r) { return thm3_4(r, true); }});
  for (const auto* ch : {&kFibonacciCharacteristic, &kPrintedCassiniCharacteristic}) {
    out.push_back({"Thm3.5.C1[" + ch->str() + "]", [ch](IndexRange r) { return cassini(r, *ch, false); }});
    out.push_back({"Thm3.5.C2[" + ch->str() + "]", [ch](IndexRange r) { return cassini(r, *ch, true); }});
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool label_matches(std::string_view label, std::string_view selector) {
  std::string l = lower(label), s = lower(selector);
  if (l == s) return true;
  return l.size() > s.size() && l.compare(0, s.size(), s) == 0 && l[s.size()] == '[';
}

std::vector<IdentityReport> run(const std::vector<NamedChecker>& list, IndexRange range) {
  range = IndexRange::checked(range.lo, range.hi);
  std::vector<IdentityReport> out;
  out.reserve(list.size());
  for (const auto& c : list) out.push_back(c.run(range));
  return out;
}

std::vector<NamedChecker> select(std::string_view prefix) {
  std::vector<NamedChecker> out;
  for (auto& c : checkers())
    if (c.label.rfind(prefix, 0) == 0) out.push_back(std::move(c));
  return out;
}

}  // namespace

IdentityReport check_binet(const SequenceId& sequence, IndexRange range) {
  range = IndexRange::checked(range.lo, range.hi);
  return binet_report(sequence.params(), sequence.name(), range);
}

IdentityReport check_binet(const HoradamParams& params, IndexRange range) {
  range = IndexRange::checked(range.lo, range.hi);
  return binet_report(params, params.str(), range);
}

std::vector<IdentityReport> check_fibonacci_lucas_binet(IndexRange range) { return run(select("Thm3.4."), range); }
std::vector<IdentityReport> check_fibonacci_relations(IndexRange range) { return run(select("Thm3.1."), range); }
std::vector<IdentityReport> check_lucas_relations(IndexRange range) { return run(select("Thm3.2."), range); }
std::vector<IdentityReport> check_conjugate_relations(IndexRange range) { return run(select("Thm3.3."), range); }
std::vector<IdentityReport> check_cassini(IndexRange range) { return run(select("Thm3.5."), range); }

IdentityReport check_cassini_c1(IndexRange range, const Characteristic& characteristic) {
  return cassini(IndexRange::checked(range.lo, range.hi), characteristic, false);
}

IdentityReport check_cassini_c2(IndexRange range, const Characteristic& characteristic) {
  return cassini(IndexRange::checked(range.lo, range.hi), characteristic, true);
}

IdentityReport check_scalar_cassini(IndexRange range) {
  range = IndexRange::checked(range.lo, range.hi);
  HoradamTable f(kFibonacci, range.lo - 1, range.hi + 1);
  return evaluate<HQ>(
      "Cassini.scalar", "fibonacci", range,
      [&](std::int64_t n) {
        HQ x = HQ::from_scalar(f.at(n));
        return HQ::from_scalar(f.at(n + 1)) * HQ::from_scalar(f.at(n - 1)) - x * x;
      },
      [&](std::int64_t n) { return HQ::from_scalar(sign_power(n)); });
}

std::vector<IdentityReport> audit_all(IndexRange range) { return run(checkers(), range); }

std::vector<IdentityReport> audit_selected(std::string_view selector, IndexRange range) {
  std::vector<NamedChecker> chosen;
  for (auto& c : checkers())
    if (label_matches(c.label, selector)) chosen.push_back(std::move(c));
  return run(chosen, range);
}

std::vector<std::string> identity_labels() {
  std::vector<std::string> out;
  for (const auto& c : checkers())
    if (std::find(out.begin(), out.end(), c.label) == out.end()) out.push_back(c.label);
  return out;
}

namespace {

nlohmann::ordered_json report_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["sequence"] = r.sequence;
  j["range"] = {r.range.lo, r.range.hi};
  j["status"] = std::string(to_string(r.status));
  if (r.first_failure) {
    const auto& f = *r.first_failure;
    j["first_failure"] = {{"n", f.n}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"residual", f.residual}};
  } else {
    j["first_failure"] = nullptr;
  }
  j["error"] = r.error ? nlohmann::ordered_json(*r.error) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace

std::string to_json(const IdentityReport& report) { return report_json(report).dump(2); }

std::string to_json(const std::vector<IdentityReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

}  // namespace hhq
