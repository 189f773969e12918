#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "unicomm/io.hpp"

namespace fs = std::filesystem;
using namespace unicomm;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

// stdout only; stderr goes to a file next to the inputs.
Outcome run(const std::string& args, const std::string& stdin_file = "") {
  std::string cmd = std::string("'") + UNICOMM_CLI + "' " + args + " 2>" + (fs::temp_directory_path() / "unicomm_cli_err.txt").string();
  if (!stdin_file.empty()) cmd += " <'" + stdin_file + "'";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string last_stderr() {
  std::ifstream in(fs::temp_directory_path() / "unicomm_cli_err.txt");
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("unicomm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  static std::string read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* const kCompanion = "GF(7)\n2\n0 6\n1 3\n";

}  // namespace

TEST_F(Cli, FactorWritesVerifiedCertificate) {
  const std::string in = write("a.txt", kCompanion);
  const std::string out = path("c.json");
  const Outcome r = run("factor --field 'GF(7)' --input '" + in + "' --json '" + out + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("route: thm3.2(alpha=1)"), std::string::npos);
  const Factorization c = parse_certificate(read(out));
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(c.route.front(), "thm3.2(alpha=1)");
  EXPECT_TRUE(verify(c).ok);

  const Outcome v = run("verify --cert '" + out + "'");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("PASS"), std::string::npos);
}

TEST_F(Cli, FactorToStdoutAndFromStdin) {
  const std::string in = write("a.txt", kCompanion);
  const Outcome r = run("factor --input -", in);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(verify(parse_certificate(r.out)).ok);
  EXPECT_NE(last_stderr().find("pairs: 1"), std::string::npos);
}

TEST_F(Cli, DeterministicOutput) {
  const std::string sl = write("sl.txt", "GF(9)\n3\n1 (0,1) 2\n0 1 (1,1)\n0 0 1\n");
  const Outcome c = run("factor --input '" + sl + "'");
  const Outcome d = run("factor --input '" + sl + "'");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.out, d.out);
  EXPECT_TRUE(verify(parse_certificate(c.out)).ok);
}

TEST_F(Cli, TamperedCertificateFails) {
  const std::string in = write("a.txt", kCompanion);
  const Outcome r = run("factor --input '" + in + "'");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  j["pairs"][0]["y"][0][0] = "6";
  const std::string cert = write("bad.json", j.dump());
  const Outcome v = run("verify --cert '" + cert + "'");
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, InputErrorsExitTwo) {
  const std::string in = write("a.txt", kCompanion);
  EXPECT_EQ(run("factor --field 'GF(5)' --input '" + in + "'").code, 2);
  EXPECT_EQ(run("factor --input '" + write("bad.txt", "GF(7)\n2\n1 2\n") + "'").code, 2);
  EXPECT_EQ(run("factor --input '" + write("det.txt", "GF(7)\n2\n2 0\n0 1\n") + "'").code, 2);
  EXPECT_EQ(run("factor --input '" + write("j2.txt", "GF(2)\n2\n1 1\n0 1\n") + "'").code, 2);
  EXPECT_EQ(run("factor --input '" + path("missing.txt") + "'").code, 2);
  EXPECT_EQ(run("verify --cert '" + write("junk.json", "{") + "'").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("bounds --field 'GF(3)' --n 3").code, 2);
  EXPECT_EQ(run("oracle-lengths --field 'GF(7)' --n 3").code, 2);
}

TEST_F(Cli, Bounds) {
  const Outcome r = run("bounds --field 'GF(5)' --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pairs: 3"), std::string::npos);
  EXPECT_NE(r.out.find("u2_factors: 6"), std::string::npos);
  const Outcome s = run("bounds --field 'GF(8)' --n 3");
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("pairs: 2"), std::string::npos);
  EXPECT_NE(run("bounds --field Q --n 5").out.find("pairs: 3"), std::string::npos);
}

TEST_F(Cli, OracleCommands) {
  const Outcome l = run("oracle-lengths --field 'GF(5)' --n 2");
  ASSERT_EQ(l.code, 0);
  EXPECT_EQ(l.out.rfind("id,matrix,trace,is_u2,bfs_length\n", 0), 0u);
  EXPECT_NE(l.out.find(",\"4 0;0 4\",3,0,3\n"), std::string::npos);

  const Outcome d = run("oracle-derived --field 'GF(3)' --n 2");
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(std::count(d.out.begin(), d.out.end(), '\n'), 1 + 8);

  EXPECT_EQ(run("oracle-check-trace --field 'GF(7)' --n 2").code, 0);
  EXPECT_EQ(run("oracle-lengths --field 'GF(7)' --n 2 --budget 10").code, 2);
}

TEST_F(Cli, Selftest) {
  const Outcome r = run("selftest");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run("--seed 7 selftest").code, 0);
}
