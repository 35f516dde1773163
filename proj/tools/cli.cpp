#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "hhq/error.hpp"
#include "hhq/identity_audit.hpp"
#include "hhq/sequences.hpp"

namespace hhq::cli {
namespace {

constexpr const char* kOrderHelp =
    "Coefficient order:\n"
    "  scalar             w\n"
    "  hybrid             a,b_hi,c_eps,d_hh        (1, hi, eps, hh)\n"
    "  quaternion         z0,z1,z2,z3              (1, i, j, k)\n"
    "  hybrid-quaternion  c_<u>_<v>, u in 1,i,j,k (major), v in 1,hi,eps,hh (minor):\n"
    "                     c_1_1,c_1_hi,c_1_eps,c_1_hh,c_i_1,...,c_k_hh\n"
    "Rationals are written n or n/d (reduced); JSON carries them as strings.\n"
    "Exit codes: 0 success / all verified, 1 refutation found, 2 usage or evaluation error.";

struct Query {
  std::string sequence;
  std::string params;
  std::int64_t from = 0;
  std::int64_t to = 10;
  std::string lift = "scalar";
  std::string method = "recurrence";
  std::string format = "csv";
  std::string identity;
  bool all = false;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> hq_columns() {
  std::vector<std::string> cols;
  const char* u[] = {"1", "i", "j", "k"};
  const char* v[] = {"1", "hi", "eps", "hh"};
  for (auto* a : u)
    for (auto* b : v) cols.push_back(std::string("c_") + a + "_" + b);
  return cols;
}

std::vector<std::string> columns(const std::string& lift) {
  if (lift == "scalar") return {"w"};
  if (lift == "hybrid") return {"a", "b_hi", "c_eps", "d_hh"};
  if (lift == "quaternion") return {"z0", "z1", "z2", "z3"};
  return hq_columns();
}

std::vector<std::string> strings(const HybridQuaternion<Rational>& x) {
  std::vector<std::string> out;
  for (const auto& c : x.coeffs()) out.push_back(c.str());
  return out;
}

template <class Quad>
std::vector<std::string> strings4(const Quad& x) {
  std::vector<std::string> out;
  for (int k = 0; k < 4; ++k) out.push_back(x[k].str());
  return out;
}

Rational exact(const QuadExt& x) {
  if (!x.is_rational()) throw Error(ErrorKind::InexactValue, "closed form left a surd part: " + x.str());
  return x.rational_part();
}

HoradamParams resolve_params(const Query& q) {
  if (!q.params.empty()) return HoradamParams::parse(q.params);
  if (!q.sequence.empty()) return SequenceId::parse(lower(q.sequence)).params();
  throw Error(ErrorKind::Parse, "one of --sequence or --params is required");
}

// One row of coefficients (as strings) for index n.
std::vector<std::string> row(const Query& q, const HoradamTable* table, const BinetData* binet, std::int64_t n) {
  if (table) {
    if (q.lift == "scalar") return {table->at(n).str()};
    if (q.lift == "hybrid") return strings4(table->hybrid(n));
    if (q.lift == "quaternion") return strings4(table->quaternion(n));
    return strings(table->hybrid_quaternion(n));
  }
  if (q.lift == "scalar") return {exact(binet_scalar(*binet, n)).str()};
  if (q.lift == "hybrid") {
    auto h = binet_hybrid(*binet, n);
    return strings4(Hybrid<Rational>{exact(h.re), exact(h.hi), exact(h.eps), exact(h.hh)});
  }
  if (q.lift == "quaternion") {
    auto z = binet_quaternion(*binet, n);
    return strings4(Quaternion<Rational>{exact(z.z0), exact(z.z1), exact(z.z2), exact(z.z3)});
  }
  return strings(to_rational(binet_hybrid_quaternion(*binet, n)));
}

void write_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::string>& cells) {
  for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
  out << "\n";
  for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
  out << "\n";
}

int run_seq(const Query& q, std::ostream& out) {
  IndexRange range = IndexRange::checked(q.from, q.to);
  HoradamParams params = resolve_params(q);

  std::optional<HoradamTable> table;
  std::optional<BinetData> binet;
  if (q.method == "binet")
    binet = binet_data(params);
  else
    table.emplace(params, range.lo, range.hi + (q.lift == "hybrid-quaternion" ? 6 : q.lift == "scalar" ? 0 : 3));

  std::vector<std::vector<std::string>> rows;
  for (std::int64_t n = range.lo; n <= range.hi; ++n)
    rows.push_back(row(q, table ? &*table : nullptr, binet ? &*binet : nullptr, n));

  if (q.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      nlohmann::ordered_json r;
      r["n"] = range.lo + static_cast<std::int64_t>(k);
      r["coeffs"] = rows[k];
      arr.push_back(r);
    }
    out << arr.dump(2) << "\n";
    return kExitOk;
  }
  auto cols = columns(q.lift);
  out << "n";
  for (const auto& c : cols) out << "," << c;
  out << "\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out << range.lo + static_cast<std::int64_t>(k);
    for (const auto& c : rows[k]) out << "," << c;
    out << "\n";
  }
  return kExitOk;
}

int run_audit(const Query& q, std::ostream& out) {
  IndexRange range = IndexRange::checked(q.from, q.to);
  std::vector<IdentityReport> reports;
  bool custom = !q.sequence.empty() || !q.params.empty();
  if (q.all) {
    if (custom) throw Error(ErrorKind::Parse, "--sequence/--params cannot be combined with --all");
    reports = audit_all(range);
  } else if (custom) {
    if (lower(q.identity) != "thm2.1")
      throw Error(ErrorKind::Parse, "--sequence/--params only apply to --identity thm2.1");
    reports.push_back(q.params.empty() ? check_binet(SequenceId::parse(lower(q.sequence)), range)
                                       : check_binet(HoradamParams::parse(q.params), range));
  } else {
    reports = audit_selected(q.identity, range);
    if (reports.empty()) throw Error(ErrorKind::Parse, "unknown identity '" + q.identity + "'");
  }
  out << to_json(reports) << "\n";
  bool refuted = std::any_of(reports.begin(), reports.end(),
                             [](const auto& r) { return r.status == AuditStatus::Refuted; });
  return refuted ? kExitRefuted : kExitOk;
}

HybridQuaternion<Rational> parse_operand(const std::string& line) {
  if (line.find('*') != std::string::npos) return HybridQuaternion<Rational>::parse(line);
  std::string normalized = line;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream tokens(normalized);
  std::vector<std::string> parts{std::istream_iterator<std::string>(tokens), {}};
  if (parts.size() != 16)
    throw Error(ErrorKind::Parse, "operand needs 16 coefficients, got " + std::to_string(parts.size()));
  std::array<Rational, 16> c;
  for (std::size_t k = 0; k < 16; ++k) c[k] = Rational::parse(parts[k]);
  return HybridQuaternion<Rational>(c);
}

int run_mul(const Query& q, std::istream& in, std::ostream& out) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  if (lines.size() != 2)
    throw Error(ErrorKind::Parse, "expected two operands on standard input, got " + std::to_string(lines.size()));
  auto product = parse_operand(lines[0]) * parse_operand(lines[1]);
  auto cells = strings(product);
  if (q.format == "json") {
    nlohmann::ordered_json j;
    j["coeffs"] = cells;
    out << j.dump(2) << "\n";
  } else {
    write_csv(out, hq_columns(), cells);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hybrid numbers, quaternions and Horadam hybrid quaternions", "hhq"};
  app.require_subcommand(1);
  app.footer(kOrderHelp);

  Query q;
  const std::vector<std::string> lifts = {"scalar", "hybrid", "quaternion", "hybrid-quaternion"};

  auto* seq = app.add_subcommand("seq", "Emit a table of Horadam values or their lifts");
  seq->add_option("--sequence", q.sequence, "Named sequence, e.g. fibonacci, pell-lucas, generalized-fibonacci(3,-1)");
  seq->add_option("--params", q.params, "Explicit w0,w1,p,q (overrides --sequence)");
  seq->add_option("--from", q.from, "First index")->capture_default_str();
  seq->add_option("--to", q.to, "Last index")->capture_default_str();
  seq->add_option("--lift", q.lift, "scalar | hybrid | quaternion | hybrid-quaternion")
      ->check(CLI::IsMember(lifts))
      ->capture_default_str();
  seq->add_option("--method", q.method, "recurrence | binet")
      ->check(CLI::IsMember({"recurrence", "binet"}))
      ->capture_default_str();
  seq->add_option("--format", q.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  Query aq;
  aq.from = -10;
  aq.to = 30;
  auto* audit = app.add_subcommand("audit", "Verify or refute identities exactly; JSON report on stdout");
  auto* id_opt = audit->add_option("--identity", aq.identity, "Identity label, e.g. thm3.1.i, thm3.3.iii, thm2.1");
  auto* all_flag = audit->add_flag("--all", aq.all, "Run every identity");
  id_opt->excludes(all_flag);
  audit->add_option("--sequence", aq.sequence, "Sequence for thm2.1");
  audit->add_option("--params", aq.params, "Explicit w0,w1,p,q for thm2.1");
  audit->add_option("--from", aq.from, "First index")->capture_default_str();
  audit->add_option("--to", aq.to, "Last index")->capture_default_str();

  Query mq;
  auto* mul = app.add_subcommand("mul", "Multiply two hybrid quaternions read from stdin (one per line)");
  mul->add_option("--format", mq.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (seq->parsed()) return run_seq(q, out);
    if (audit->parsed()) {
      if (!aq.all && aq.identity.empty()) {
        err << "error: audit needs --identity <id> or --all\n";
        return kExitError;
      }
      return run_audit(aq, out);
    }
    return run_mul(mq, in, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace hhq::cli
