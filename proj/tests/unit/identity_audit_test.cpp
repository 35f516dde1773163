#include <gtest/gtest.h>

#include <json.hpp>
#include <map>

#include "hhq/identity_audit.hpp"
#include "oracle_identities.hpp"

namespace hhq {
namespace {

// Verdicts fixed before the auditor existed, by the matrix oracle at n = 0, 1.
const std::map<std::string, AuditStatus> kGoldenVerdicts = {
    {"Thm3.1.i", AuditStatus::Verified},
    {"Thm3.1.ii", AuditStatus::Verified},
    {"Thm3.1.iii", AuditStatus::Refuted},
    {"Thm3.2.i", AuditStatus::Verified},
    {"Thm3.2.ii", AuditStatus::Verified},
    {"Thm3.3.i", AuditStatus::Verified},
    {"Thm3.3.ii", AuditStatus::Verified},
    {"Thm3.3.iii[hat]", AuditStatus::Refuted},
    {"Thm3.3.iii[breve]", AuditStatus::Refuted},
    {"Thm3.4.i", AuditStatus::Verified},
    {"Thm3.4.ii", AuditStatus::Verified},
    {"Thm3.5.C1[x^2-x-1]", AuditStatus::Verified},
    {"Thm3.5.C2[x^2-x-1]", AuditStatus::Refuted},
    {"Thm3.5.C1[x^2-2x-1]", AuditStatus::Refuted},
    {"Thm3.5.C2[x^2-2x-1]", AuditStatus::Refuted},
};

const std::map<std::string, AuditStatus> kGoldenBinet = {
    {"generalized-fibonacci(3,-1)", AuditStatus::Verified},
    {"generalized-lucas(3,-1)", AuditStatus::Verified},
    {"fibonacci", AuditStatus::Verified},
    {"lucas", AuditStatus::Verified},
    {"pell", AuditStatus::Verified},
    {"pell-lucas", AuditStatus::Verified},
    {"jacobsthal", AuditStatus::Unevaluable},
    {"jacobsthal-lucas", AuditStatus::Unevaluable},
    {"mersenne", AuditStatus::Unevaluable},
    {"fermat", AuditStatus::Verified},
};

// Live re-derivation of the goldens through the matrix oracle.
AuditStatus oracle_verdict(const std::string& label) {
  using namespace oracle;
  const std::map<std::string, std::function<bool(int)>> checks = {
      {"Thm3.1.i", thm3_1_i},
      {"Thm3.1.ii", thm3_1_ii},
      {"Thm3.1.iii", thm3_1_iii},
      {"Thm3.2.i", thm3_2_i},
      {"Thm3.2.ii", thm3_2_ii},
      {"Thm3.3.i", thm3_3_i},
      {"Thm3.3.ii", thm3_3_ii},
      {"Thm3.3.iii[hat]", thm3_3_iii_hat},
      {"Thm3.3.iii[breve]", thm3_3_iii_breve},
      {"Thm3.4.i", thm3_4_i},
      {"Thm3.4.ii", thm3_4_ii},
      {"Thm3.5.C1[x^2-x-1]", [](int n) { return cassini_c1(1, -1, n); }},
      {"Thm3.5.C2[x^2-x-1]", [](int n) { return cassini_c2(1, -1, std::sqrt(5.0L), n); }},
      {"Thm3.5.C1[x^2-2x-1]", [](int n) { return cassini_c1(2, -1, n); }},
      {"Thm3.5.C2[x^2-2x-1]", [](int n) { return cassini_c2(2, -1, 2 * std::sqrt(2.0L), n); }},
  };
  const auto& f = checks.at(label);
  return f(0) && f(1) ? AuditStatus::Verified : AuditStatus::Refuted;
}

TEST(IdentityAudit, OracleReproducesFrozenGoldens) {
  for (const auto& [label, status] : kGoldenVerdicts) EXPECT_EQ(oracle_verdict(label), status) << label;
}

TEST(IdentityAudit, AuditAllMatchesGoldens) {
  auto reports = audit_all({-10, 30});
  ASSERT_EQ(reports.size(), 25u);
  for (std::size_t k = 0; k < 10; ++k) {
    EXPECT_EQ(reports[k].identity, "Thm2.1");
    EXPECT_EQ(reports[k].status, kGoldenBinet.at(reports[k].sequence)) << reports[k].sequence;
  }
  for (std::size_t k = 10; k < reports.size(); ++k)
    EXPECT_EQ(reports[k].status, kGoldenVerdicts.at(reports[k].identity)) << reports[k].identity;
}

TEST(IdentityAudit, VerdictsStableOverOracleWindow) {
  for (const auto& report : audit_all({0, 1}))
    if (report.identity != "Thm2.1") EXPECT_EQ(report.status, kGoldenVerdicts.at(report.identity)) << report.identity;
}

TEST(IdentityAudit, LabelsInOrder) {
  std::vector<std::string> expected = {"Thm2.1"};
  for (const char* l : {"Thm3.1.i", "Thm3.1.ii", "Thm3.1.iii", "Thm3.2.i", "Thm3.2.ii", "Thm3.3.i", "Thm3.3.ii",
                        "Thm3.3.iii[hat]", "Thm3.3.iii[breve]", "Thm3.4.i", "Thm3.4.ii", "Thm3.5.C1[x^2-x-1]",
                        "Thm3.5.C2[x^2-x-1]", "Thm3.5.C1[x^2-2x-1]", "Thm3.5.C2[x^2-2x-1]"})
    expected.push_back(l);
  EXPECT_EQ(identity_labels(), expected);
}

TEST(IdentityAudit, Examples) {
  auto r = audit_selected("thm3.1.i", {0, 100});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].status, AuditStatus::Verified);
  EXPECT_FALSE(r[0].first_failure);
  for (const auto& rep : check_lucas_relations({-5, 100})) EXPECT_EQ(rep.status, AuditStatus::Verified);
  auto single = check_lucas_relations({0, 0});
  EXPECT_EQ(single[0].range.lo, 0);
  EXPECT_EQ(single[0].range.hi, 0);
  EXPECT_EQ(check_binet(SequenceId(SequenceKind::Fibonacci), {-10, 40}).status, AuditStatus::Verified);
  EXPECT_EQ(check_binet(SequenceId(SequenceKind::Lucas), {-10, 40}).status, AuditStatus::Verified);
  auto mersenne = check_binet(SequenceId(SequenceKind::Mersenne), {0, 5});
  EXPECT_EQ(mersenne.status, AuditStatus::Unevaluable);
  EXPECT_EQ(mersenne.error, "rational roots");
  EXPECT_EQ(check_binet(HoradamParams{1, 1, 2, 1}, {0, 5}).error, "repeated root");
  EXPECT_EQ(check_scalar_cassini({1, 100}).status, AuditStatus::Verified);
  EXPECT_THROW(audit_all(IndexRange::checked(1, 0)), Error);
}

TEST(IdentityAudit, SelectorMatching) {
  EXPECT_EQ(audit_selected("THM3.3.III", {0, 1}).size(), 2u);
  EXPECT_EQ(audit_selected("thm3.3.iii[hat]", {0, 1}).size(), 1u);
  EXPECT_EQ(audit_selected("thm3.5.c2", {0, 1}).size(), 2u);
  EXPECT_EQ(audit_selected("thm2.1", {0, 1}).size(), 10u);
  EXPECT_TRUE(audit_selected("thm3.3", {0, 1}).empty());
  EXPECT_TRUE(audit_selected("nope", {0, 1}).empty());
}

TEST(IdentityAudit, FailureWitnessIsFirstAndConsistent) {
  auto rep = audit_selected("thm3.1.iii", {-3, 50});
  ASSERT_EQ(rep.size(), 1u);
  ASSERT_TRUE(rep[0].first_failure);
  const auto& w = *rep[0].first_failure;
  EXPECT_EQ(w.n, -3);
  auto lhs = HybridQuaternion<Rational>::parse(w.lhs), rhs = HybridQuaternion<Rational>::parse(w.rhs);
  EXPECT_EQ((lhs - rhs).str(), w.residual);
  EXPECT_FALSE((lhs - rhs).is_zero());

  auto c2 = check_cassini_c2({1, 5}, kFibonacciCharacteristic);
  ASSERT_TRUE(c2.first_failure);
  EXPECT_EQ(c2.first_failure->n, 1);
  auto l2 = HybridQuaternion<QuadExt>::parse(c2.first_failure->lhs);
  auto r2 = HybridQuaternion<QuadExt>::parse(c2.first_failure->rhs);
  // the true constant carries the opposite sign
  EXPECT_EQ(l2 + r2, HybridQuaternion<QuadExt>{});
}

TEST(IdentityAudit, Json) {
  auto rep = audit_selected("thm3.1.iii", {0, 2});
  auto j = nlohmann::json::parse(to_json(rep[0]));
  EXPECT_EQ(j["identity"], "Thm3.1.iii");
  EXPECT_EQ(j["sequence"], "fibonacci");
  EXPECT_EQ(j["range"], nlohmann::json::array({0, 2}));
  EXPECT_EQ(j["status"], "REFUTED");
  EXPECT_EQ(j["first_failure"]["n"], 0);
  EXPECT_TRUE(j["first_failure"]["lhs"].is_string());
  EXPECT_TRUE(j["error"].is_null());
  auto all = nlohmann::json::parse(to_json(audit_all({0, 1})));
  EXPECT_EQ(all.size(), 25u);
  EXPECT_EQ(all[8]["error"], "rational roots");
}

TEST(Characteristic, Rendering) {
  EXPECT_EQ(kFibonacciCharacteristic.str(), "x^2-x-1");
  EXPECT_EQ(kPrintedCassiniCharacteristic.str(), "x^2-2x-1");
  EXPECT_EQ((Characteristic{-3, 2}).str(), "x^2+3x+2");
}

}  // namespace
}  // namespace hhq
