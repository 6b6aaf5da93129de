#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Invocation {
  int status;
  std::string out;
};

Invocation run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + PLK_BINARY + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(PLK_DATA_DIR) + "/" + name; }

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify all " + data("aff1.json") + " --samples 10").status, 0);
  EXPECT_EQ(run("verify cybe " + data("gl2_non_cybe.json")).status, 1);
  const Invocation bad = run("verify algebra " + data("bad_index.json"));
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.out.find("IndexOutOfRange"), std::string::npos);
  EXPECT_EQ(run("verify group " + data("gl3_trace.json")).status, 2);
  EXPECT_EQ(run("verify bogus " + data("aff1.json")).status, 2);
  EXPECT_EQ(run("verify algebra /nonexistent.json").status, 2);
}

TEST(Cli, MachineReportToFile) {
  const auto path = std::filesystem::temp_directory_path() / "plk_cli_test_report.json";
  std::filesystem::remove(path);
  EXPECT_EQ(run("verify bracket " + data("aff1.json") + " --format machine --out " + path.string()).status, 0);
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  EXPECT_NE(buf.str().find("\"overall\": true"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, SeedPrecedence) {
  const std::string args = "verify group " + data("aff1.json") + " --samples 5 --format machine";
  EXPECT_NE(run(args).out.find("\"seed\": 7"), std::string::npos);  // from the file
  EXPECT_NE(run(args, "POISSON_LIE_KIT_SEED=11").out.find("\"seed\": 11"), std::string::npos);
  EXPECT_NE(run(args + " --seed 13", "POISSON_LIE_KIT_SEED=11").out.find("\"seed\": 13"), std::string::npos);
  EXPECT_EQ(run(args, "POISSON_LIE_KIT_SEED=abc").status, 2);
}

TEST(Cli, KernelSubcommand) {
  const Invocation r = run("kernel " + data("sl2_ef.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("kernel dimension 1"), std::string::npos) << r.out;
}

}  // namespace
