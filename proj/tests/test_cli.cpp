#include "binsum/commands.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run_cli(const std::string& args) {
  const fs::path err_file = fs::temp_directory_path() / "binsum_cli_stderr.txt";
  const std::string cmd = std::string(BINSUM_CLI_PATH) + " " + args + " 2>" + err_file.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err_file)};
}

fs::path golden(const std::string& name) { return fs::path(BINSUM_GOLDEN_DIR) / name; }

class CliTempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / "binsum_cli_test";
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST(CliCompute, Examples) {
  auto r = run_cli("compute --n 2 --r 2 --method both");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "17/6 17/6 MATCH\n");

  r = run_cli("compute --n 1 --r 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3/2\n");

  r = run_cli("compute --n 0 --r 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/1\n");

  EXPECT_EQ(run_cli("compute --n 3 --r 1 --method lemma").out, "15/4\n");
  EXPECT_EQ(run_cli("compute --n 2 --r 3 --method direct").out, "31/10\n");
}

TEST(CliCompute, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("compute --n 2 --r 0").code, 2);
  EXPECT_EQ(run_cli("compute --n -1 --r 2").code, 2);
  EXPECT_EQ(run_cli("compute --r 2").code, 2);
  EXPECT_EQ(run_cli("compute --n 0 --r 2 --method lemma").code, 2);
  EXPECT_EQ(run_cli("compute --n 2 --r 2 --method simpson").code, 2);
  EXPECT_EQ(run_cli("compute --n two --r 2").code, 2);
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
}

TEST(CliCompute, HelpExitsZero) { EXPECT_EQ(run_cli("--help").code, 0); }

TEST(CliCertify, MatchesGoldensByteForByte) {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{
           {2, 1}, {2, 3}, {3, 3}, {8, 7}, {2, 7}, {1, 4}, {9, 4}, {3, 5}, {7, 5}}) {
    const auto name = "certify_" + std::to_string(n) + "_" + std::to_string(r) + ".json";
    const auto res = run_cli("certify --n " + std::to_string(n) + " --r " + std::to_string(r));
    EXPECT_EQ(res.code, 0) << name;
    EXPECT_EQ(res.out, slurp(golden(name))) << name;
  }
}

TEST(CliCertify, UsageErrors) {
  EXPECT_EQ(run_cli("certify --n 0 --r 1").code, 2);
  EXPECT_EQ(run_cli("certify --n 1").code, 2);
}

TEST(CliVerify, GoldensAndTamperedFiles) {
  for (const char* name : {"certify_2_1.json", "certify_8_7.json", "certify_3_3.json", "certify_7_5.json"}) {
    const auto res = run_cli("verify " + golden(name).string());
    EXPECT_EQ(res.code, 0) << name;
    EXPECT_EQ(res.out, "valid\n");
  }
  auto res = run_cli("verify " + golden("tampered_composite_p.json").string());
  EXPECT_EQ(res.code, 1);
  EXPECT_NE(res.err.find("witness not prime"), std::string::npos);

  res = run_cli("verify " + golden("tampered_bound.json").string());
  EXPECT_EQ(res.code, 1);
  EXPECT_NE(res.err.find("valuation claim fails"), std::string::npos);

  res = run_cli("verify " + golden("tampered_prime.json").string());
  EXPECT_EQ(res.code, 1);
  EXPECT_NE(res.err.find("valuation claim fails"), std::string::npos);
}

TEST_F(CliTempDir, VerifyUnreadableOrMalformedIsUsageError) {
  EXPECT_EQ(run_cli("verify " + (dir_ / "nope.json").string()).code, 2);
  std::ofstream(dir_ / "bad.json") << "{\"n\": \"2\"";
  EXPECT_EQ(run_cli("verify " + (dir_ / "bad.json").string()).code, 2);
  EXPECT_EQ(run_cli("verify").code, 2);
}

TEST(CliFactcheck, Examples) {
  auto res = run_cli("factcheck --max 2");
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out, "{\"checked\":1,\"violations\":0}\n");
  res = run_cli("factcheck --max 341");
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out, "{\"checked\":340,\"violations\":0}\n");
  EXPECT_EQ(run_cli("factcheck --max 0").code, 2);
}

TEST(CliSylvester, Examples) {
  auto res = run_cli("sylvester --n-max 100 --r-max 10");
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out, "{\"checked\":855,\"violations\":0,\"max_prime\":101}\n");
  res = run_cli("sylvester --n-max 2 --r-max 2");
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out, "{\"checked\":1,\"violations\":0,\"max_prime\":3}\n");
  res = run_cli("sylvester --n-max 2000 --r-max 50");
  EXPECT_EQ(res.code, 0);
  EXPECT_NE(res.out.find("\"violations\":0"), std::string::npos);
  EXPECT_EQ(run_cli("sylvester --n-max 1 --r-max 2").code, 2);
}

TEST_F(CliTempDir, SweepExitCodes) {
  const auto out = (dir_ / "s.jsonl").string();
  auto res = run_cli("sweep --n-min 1 --n-max 50 --r-min 1 --r-max 20 --jobs 2 --out " + out);
  EXPECT_EQ(res.code, 0);
  EXPECT_NE(res.out.find("\"records\":1000"), std::string::npos);
  EXPECT_NE(res.out.find("\"integers\":0"), std::string::npos);

  res = run_cli("sweep --n-min 1 --n-max 50 --r-min 1 --r-max 20 --resume --out " + out);
  EXPECT_EQ(res.code, 0);
  EXPECT_NE(res.out.find("\"reused\":1000"), std::string::npos);

  EXPECT_EQ(run_cli("sweep --n-min 5 --n-max 4 --r-min 1 --r-max 2 --out " + out).code, 2);
  EXPECT_EQ(run_cli("sweep --n-min 0 --n-max 4 --r-min 1 --r-max 2 --out " + out).code, 2);
  EXPECT_EQ(run_cli("sweep --n-min 1 --n-max 4 --r-min 1 --r-max 2 --out " +
                    (dir_ / "missing" / "x.jsonl").string())
                .code,
            2);

  std::ofstream(dir_ / "corrupt.jsonl") << "{\"n\":\"1\",\"r\":\"1\"}\n";
  res = run_cli("sweep --n-min 1 --n-max 2 --r-min 1 --r-max 2 --resume --out " +
                (dir_ / "corrupt.jsonl").string());
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("line 1"), std::string::npos);
}

TEST(Commands, WriteToGivenStreams) {
  std::ostringstream out, err;
  EXPECT_EQ(binsum::cli::cmd_compute(2, 2, binsum::cli::ComputeMethod::Both, out, err), 0);
  EXPECT_EQ(out.str(), "17/6 17/6 MATCH\n");
  out.str("");
  EXPECT_EQ(binsum::cli::cmd_certify(3, 3, out, err), 0);
  EXPECT_EQ(out.str(), slurp(golden("certify_3_3.json")));
  EXPECT_EQ(binsum::cli::cmd_factcheck(1000, out, err), 0);
}
