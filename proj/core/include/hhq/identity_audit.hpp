#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhq/sequences.hpp"

namespace hhq {

enum class AuditStatus { Verified, Refuted, Unevaluable };

std::string_view to_string(AuditStatus status);

/// First index at which lhs - rhs is nonzero, with exact renderings.
struct FailureWitness {
  std::int64_t n;
  std::string lhs;
  std::string rhs;
  std::string residual;

  friend bool operator==(const FailureWitness&, const FailureWitness&) = default;
};

/// Verdict on one identity over an index range. VERIFIED iff the residual is
/// exactly zero at every index; REFUTED carries the smallest failing index.
/// UNEVALUABLE carries the error that prevented evaluation.
struct IdentityReport {
  std::string identity;
  std::string sequence;
  IndexRange range;
  AuditStatus status;
  std::optional<FailureWitness> first_failure;
  std::optional<std::string> error;

  friend bool operator==(const IdentityReport& a, const IdentityReport& b) {
    return a.identity == b.identity && a.sequence == b.sequence && a.range.lo == b.range.lo &&
           a.range.hi == b.range.hi && a.status == b.status && a.first_failure == b.first_failure &&
           a.error == b.error;
  }
};

/// The quadratic whose roots feed a Cassini closed form: x^2 - p x + q = 0.
struct Characteristic {
  Rational p, q;
  /// e.g. "x^2-x-1".
  std::string str() const;
};

inline const Characteristic kFibonacciCharacteristic{1, -1};
inline const Characteristic kPrintedCassiniCharacteristic{2, -1};

/// Closed form A a* a_ a^n + B b* b_ b^n against the recurrence lift.
IdentityReport check_binet(const SequenceId& sequence, IndexRange range);
IdentityReport check_binet(const HoradamParams& params, IndexRange range);

/// Fibonacci/Lucas closed forms written without A, B.
std::vector<IdentityReport> check_fibonacci_lucas_binet(IndexRange range);

/// F^_n + F^_{n+1} = F^_{n+2}; the i/j/k and hi/eps/hh shifted sums.
std::vector<IdentityReport> check_fibonacci_relations(IndexRange range);

/// F^_{n-1} + F^_{n+1} = L^_n and F^_{n+2} - F^_{n-2} = L^_n.
std::vector<IdentityReport> check_lucas_relations(IndexRange range);

/// Sums with the quaternion, hybrid and total conjugates; the total-conjugate
/// item is reported under both the hat and the breve reading.
std::vector<IdentityReport> check_conjugate_relations(IndexRange range);

/// C1 and C2, each under both characteristics.
std::vector<IdentityReport> check_cassini(IndexRange range);
IdentityReport check_cassini_c1(IndexRange range, const Characteristic& characteristic);
IdentityReport check_cassini_c2(IndexRange range, const Characteristic& characteristic);

/// F_{n+1} F_{n-1} - F_n^2 = (-1)^n through hybrid-quaternion multiplication
/// of pure scalars.
IdentityReport check_scalar_cassini(IndexRange range);

/// Every checker in a fixed order: binet x registry, relations, Lucas,
/// conjugates, Fibonacci/Lucas Binet, Cassini.
std::vector<IdentityReport> audit_all(IndexRange range);

/// Reports whose identity label matches `selector` case-insensitively, either
/// exactly or up to a trailing "[...]" qualifier ("thm3.3.iii" selects both readings).
std::vector<IdentityReport> audit_selected(std::string_view selector, IndexRange range);

/// Identity labels in audit_all order (without duplicates).
std::vector<std::string> identity_labels();

std::string to_json(const IdentityReport& report);
std::string to_json(const std::vector<IdentityReport>& reports);

}  // namespace hhq
