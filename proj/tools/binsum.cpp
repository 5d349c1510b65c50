#include "binsum/commands.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv) {
  using namespace binsum;
  CLI::App app{"Exact computation and non-integrality certificates for sum_k r/(k+r) C(n,k)"};
  app.require_subcommand(1);

  std::int64_t n = -1;
  std::int64_t r = -1;

  auto* compute = app.add_subcommand("compute", "Print S(n,r) as num/den");
  cli::ComputeMethod method = cli::ComputeMethod::Auto;
  const std::map<std::string, cli::ComputeMethod> methods{{"auto", cli::ComputeMethod::Auto},
                                                          {"direct", cli::ComputeMethod::Direct},
                                                          {"lemma", cli::ComputeMethod::Lemma},
                                                          {"both", cli::ComputeMethod::Both}};
  compute->add_option("--n", n, "n >= 0")->required();
  compute->add_option("--r", r, "r >= 1")->required();
  compute->add_option("--method", method, "auto, direct, lemma or both")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));

  auto* certify = app.add_subcommand("certify", "Emit a verified non-integrality certificate");
  certify->add_option("--n", n, "n >= 1")->required();
  certify->add_option("--r", r, "r >= 1")->required();

  auto* verify = app.add_subcommand("verify", "Check a certificate JSON file");
  std::string cert_file;
  verify->add_option("cert_file", cert_file, "certificate JSON")->required();

  auto* sweep = app.add_subcommand("sweep", "Certify every (n, r) in a rectangle, JSONL output");
  std::int64_t n_min = 1, n_max = 1, r_min = 1, r_max = 1;
  SweepConfig config;
  std::string out_path;
  sweep->add_option("--n-min", n_min)->required();
  sweep->add_option("--n-max", n_max)->required();
  sweep->add_option("--r-min", r_min)->required();
  sweep->add_option("--r-max", r_max)->required();
  sweep->add_option("--jobs", config.jobs, "worker threads (default: available parallelism)");
  sweep->add_option("--out", out_path, "JSONL output path")->required();
  sweep->add_flag("--resume", config.resume, "keep verified records already in --out");
  sweep->add_flag("--audit-fallback", config.audit_fallback,
                  "cross-check constructive witnesses against the factored denominator");
  sweep->add_flag("--record-timing", config.record_timing,
                  "fill elapsed_micros (output is then not reproducible)");

  auto* factcheck = app.add_subcommand("factcheck", "Check that no 2 <= n <= max divides 2^n - 1");
  std::int64_t max = 0;
  factcheck->add_option("--max", max)->required();

  auto* sylvester = app.add_subcommand("sylvester", "Check Sylvester windows over a range");
  std::int64_t syl_n_max = 0, syl_r_max = 0;
  unsigned syl_jobs = 1;
  sylvester->add_option("--n-max", syl_n_max)->required();
  sylvester->add_option("--r-max", syl_r_max)->required();
  sylvester->add_option("--jobs", syl_jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (*compute) return cli::cmd_compute(n, r, method, std::cout, std::cerr);
    if (*certify) return cli::cmd_certify(n, r, std::cout, std::cerr);
    if (*verify) return cli::cmd_verify(cert_file, std::cout, std::cerr);
    if (*factcheck) return cli::cmd_factcheck(max, std::cout, std::cerr);
    if (*sylvester) return cli::cmd_sylvester(syl_n_max, syl_r_max, syl_jobs, std::cout, std::cerr);
    if (*sweep) {
      if (n_min < 1 || n_max < 1 || r_min < 1 || r_max < 1) {
        std::cerr << "sweep: bounds must be >= 1\n";
        return cli::kExitUsage;
      }
      config.n_min = static_cast<std::uint64_t>(n_min);
      config.n_max = static_cast<std::uint64_t>(n_max);
      config.r_min = static_cast<std::uint64_t>(r_min);
      config.r_max = static_cast<std::uint64_t>(r_max);
      config.out_path = out_path;
      return cli::cmd_sweep(config, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitFailed;
  }
  return cli::kExitUsage;
}
