#pragma once

// Subcommand bodies for the binsum CLI. Each returns the process exit code:
// 0 all claims verified, 1 counterexample or failed verification,
// 2 usage or configuration error.

#include "binsum/binomial_sum.hpp"
#include "binsum/certificate_json.hpp"
#include "binsum/number_theory.hpp"
#include "binsum/prime_windows.hpp"
#include "binsum/sweep.hpp"
#include "binsum/witness.hpp"

#include <cstdint>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace binsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

enum class ComputeMethod { Auto, Direct, Lemma, Both };

inline int cmd_compute(std::int64_t n, std::int64_t r, ComputeMethod method, std::ostream& out,
                       std::ostream& err) {
  const bool needs_positive_n = method == ComputeMethod::Lemma || method == ComputeMethod::Both;
  if (n < 0 || r < 1 || (needs_positive_n && n < 1)) {
    err << "compute: requires r >= 1 and n >= " << (needs_positive_n ? 1 : 0) << '\n';
    return kExitUsage;
  }
  const auto un = static_cast<std::uint64_t>(n);
  const auto ur = static_cast<std::uint64_t>(r);
  switch (method) {
    case ComputeMethod::Auto: out << s_auto(un, ur).value << '\n'; return kExitOk;
    case ComputeMethod::Direct: out << s_direct(un, ur).value << '\n'; return kExitOk;
    case ComputeMethod::Lemma: out << s_lemma(un, ur).value << '\n'; return kExitOk;
    case ComputeMethod::Both: break;
  }
  const Rational direct = s_direct(un, ur).value;
  const Rational lemma = s_lemma(un, ur).value;
  const bool match = direct == lemma;
  out << direct << ' ' << lemma << ' ' << (match ? "MATCH" : "MISMATCH") << '\n';
  return match ? kExitOk : kExitFailed;
}

inline int cmd_certify(std::int64_t n, std::int64_t r, std::ostream& out, std::ostream& err) {
  if (n < 1 || r < 1) {
    err << "certify: requires n >= 1 and r >= 1\n";
    return kExitUsage;
  }
  const CertifyResult result = certify(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
  if (const auto* c = std::get_if<Counterexample>(&result)) {
    out << to_json(*c).dump() << '\n';
    err << "COUNTEREXAMPLE: S(" << n << "," << r << ") = " << c->value << " is an integer\n";
    return kExitFailed;
  }
  const auto& cert = std::get<Certificate>(result);
  out << to_json(cert).dump() << '\n';
  return cert.verified ? kExitOk : kExitFailed;
}

inline int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "verify: cannot read " << path << '\n';
    return kExitUsage;
  }
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Certificate cert;
  try {
    cert = parse_certificate(text);
  } catch (const FormatError& e) {
    err << "verify: " << e.what() << '\n';
    return kExitUsage;
  }
  const VerifyStatus status = verify_certificate_status(cert);
  if (status == VerifyStatus::Valid) {
    out << "valid\n";
    return kExitOk;
  }
  err << "invalid: " << verify_message(status) << '\n';
  return kExitFailed;
}

inline int cmd_factcheck(std::int64_t max, std::ostream& out, std::ostream& err) {
  if (max < 1) {
    err << "factcheck: requires --max >= 1\n";
    return kExitUsage;
  }
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  for (std::uint64_t n = 2; n <= static_cast<std::uint64_t>(max); ++n) {
    ++checked;
    if (divides_2n_minus_1(n)) {
      ++violations;
      err << "n=" << n << " divides 2^n - 1\n";
    }
  }
  Json report;
  report["checked"] = checked;
  report["violations"] = violations;
  out << report.dump() << '\n';
  return violations == 0 ? kExitOk : kExitFailed;
}

inline int cmd_sylvester(std::int64_t n_max, std::int64_t r_max, unsigned jobs, std::ostream& out,
                         std::ostream& err) {
  if (n_max < 2 || r_max < 2) {
    err << "sylvester: requires --n-max >= 2 and --r-max >= 2\n";
    return kExitUsage;
  }
  const auto report = verify_sylvester_range(static_cast<std::uint64_t>(n_max),
                                             static_cast<std::uint64_t>(r_max), jobs);
  for (const auto& [n, r] : report.violations)
    err << "THEOREM-VIOLATION: no prime > r in window n=" << n << " r=" << r << '\n';
  Json j;
  j["checked"] = report.checked;
  j["violations"] = report.violations.size();
  j["max_prime"] = report.max_prime;
  out << j.dump() << '\n';
  return report.violations.empty() ? kExitOk : kExitFailed;
}

inline int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const SweepSummary summary = run_sweep(config, err);
    out << to_json(summary).dump() << '\n';
    return summary.exit_code();
  } catch (const ConfigError& e) {
    err << "sweep: " << e.what() << '\n';
  } catch (const ResumeError& e) {
    err << "sweep: " << e.what() << '\n';
  } catch (const OutputError& e) {
    err << "sweep: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace binsum::cli
