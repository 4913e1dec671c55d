#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "jisolve/generator.hpp"
#include "jisolve/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(JISOLVE_BIN) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("jisolve_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write("e1.cisl", "cisl 3 2\nv 1 2 1 1\nv 2 3 1 2\nv 3 4 1 2\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SolveE1WithWitness) {
  const Outcome r = run("solve " + path("e1.cisl") + " --algo dpq --witness");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "value 2\npick 0 2\n");
}

TEST_F(Cli, BranchNo) {
  const Outcome r = run("solve " + path("e1.cisl") + " --algo branch --k 3");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "no\n");
}

TEST_F(Cli, EmptyInstance) {
  write("empty.cisl", "cisl 0 1\n");
  const Outcome r = run("solve " + path("empty.cisl") + " --algo dpq");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "value 0\n");
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("solve " + path("e1.cisl") + " --algo nope").code, 2);
  EXPECT_EQ(run("solve " + path("missing.cisl")).code, 2);
  write("bad.cisl", "cisl 2 1\nv 1 1 1 1\n");
  EXPECT_EQ(run("solve " + path("bad.cisl")).code, 2);
  EXPECT_EQ(run("solve " + path("e1.cisl") + " --algo matching").code, 3);
  write("path.2u", "2union 3 0\ng1 1 2\ng1 2 3\ng1 3 4\ng2 1 1\ng2 2 2\ng2 3 3\n");
  EXPECT_EQ(run("solve " + path("path.2u") + " --algo matching").code, 3);
  EXPECT_EQ(run("solve " + path("e1.cisl") + " --algo branch --k 2 --weighted").code, 3);
  EXPECT_EQ(run("").code, 2);
}

TEST_F(Cli, AlgorithmsAgree) {
  for (const char* algo : {"dpq", "dpgamma", "brute"}) {
    const Outcome r = run("solve " + path("e1.cisl") + " --algo " + algo);
    EXPECT_EQ(r.out, "value 2\n") << algo;
  }
  const Outcome cc = run("solve " + path("e1.cisl") + " --algo cc --k 2 --seed 3 --witness");
  EXPECT_EQ(cc.code, 0);
  EXPECT_EQ(cc.out, "yes\npick 0 2\n");
}

TEST_F(Cli, TwoUnionSolve) {
  write("cc.2u", "2union 3 2\ng1 1 1\ng1 1 1\ng1 2 2\ng2 1 1\ng2 2 2\ng2 2 2\n");
  const Outcome m = run("solve " + path("cc.2u") + " --algo matching");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out, "value 2\nyes\n");
  EXPECT_EQ(run("solve " + path("cc.2u") + " --algo dpq").out, "value 2\nyes\n");
  EXPECT_EQ(run("solve " + path("cc.2u") + " --algo brute").out, "value 2\nyes\n");
}

TEST_F(Cli, Verify) {
  const std::string e1 = path("e1.cisl");
  const Outcome ok = run("verify " + e1 + " " + write("ok.sol", "value 2\npick 0 2\n"));
  EXPECT_EQ(ok.code, 0);
  const Outcome a = run("verify " + e1 + " " + write("a.sol", "pick 0 1\n"));
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.out, "invalid: intervals 0 and 1 intersect\n");
  const Outcome b = run("verify " + e1 + " " + write("b.sol", "pick 1 2\n"));
  EXPECT_EQ(b.code, 1);
  EXPECT_EQ(b.out, "invalid: colors of 1 and 2 intersect\n");
  const Outcome v = run("verify " + e1 + " " + write("v.sol", "value 3\npick 0 2\n"));
  EXPECT_EQ(v.code, 1);
  EXPECT_EQ(run("verify " + e1 + " " + write("p.sol", "pick x\n")).code, 2);
}

TEST_F(Cli, SolveOutputVerifies) {
  for (int seed = 0; seed < 20; ++seed) {
    const std::string inst = path("g" + std::to_string(seed) + ".cisl");
    const Outcome gen = run("generate cisl --n 12 --c 8 --gamma 4 --seed " + std::to_string(seed));
    write("g" + std::to_string(seed) + ".cisl", gen.out);
    for (const char* algo : {"dpq --witness", "brute --witness"}) {
      const Outcome s = run("solve " + inst + " --algo " + algo + " --weighted");
      ASSERT_EQ(s.code, 0);
      const std::string sol = write("s.sol", s.out);
      ASSERT_EQ(run("verify --weighted " + inst + " " + sol).code, 0) << s.out;
    }
  }
}

TEST_F(Cli, GenerateGolden) {
  const Outcome r = run("generate cisl --n 5 --c 4 --gamma 2 --seed 42");
  std::ifstream in(JISOLVE_TEST_DATA "/gen_cisl_n5_c4_g2_s42.txt");
  std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(r.out, golden);
  EXPECT_EQ(run("generate cisl --n 0 --c 4 --gamma 2 --seed 1").out, "cisl 0 0\n");
  EXPECT_EQ(run("generate cisl --n 3 --c 0").code, 2);
}

TEST_F(Cli, ReduceSat) {
  const Outcome r = run("reduce-sat " + write("x1.cnf", "p cnf 1 1\n1 0\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("2union 3 2\n", 0), 0u) << r.out;
  const std::string inst = write("x1.2u", r.out);
  EXPECT_EQ(run("solve " + inst + " --algo brute").out, "value 2\nyes\n");
}

TEST_F(Cli, Kernelize) {
  const Outcome sig = run("kernelize " +
                      write("nest.2u",
                            "2union 4 1\ng1 1 4\ng1 2 3\ng1 1 1\ng1 4 4\n"
                            "g2 1 4\ng2 2 3\ng2 1 1\ng2 4 4\n") +
                      " --rules signature");
  EXPECT_EQ(sig.code, 0);
  EXPECT_EQ(sig.out, "# kept 1 2 3\n2union 3 1\ng1 2 2\ng1 1 1\ng1 3 3\ng2 2 2\ng2 1 1\ng2 3 3\n");

  const Outcome yes = run("kernelize " + write("p.cisl", "cisl 2 2\nv 1 1 1 1\nv 2 2 1 2\n") +
                      " --rules proper-kernel --k 2");
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out, "solved yes\npick 0 1\n");

  const Outcome pack = run("kernelize " +
                       write("three.cisl", "cisl 3 1\nv 1 1 1 1\nv 2 2 1 1\nv 3 3 1 1\n") +
                       " --rules colorpack --k 2");
  EXPECT_EQ(pack.code, 0);
  EXPECT_EQ(pack.out, "# k 1\n# kept\ncisl 0 0\n");

  write("claw.cisl", "cisl 4 4\nv 1 10 1 1\nv 1 1 1 2\nv 4 5 1 3\nv 10 11 1 4\n");
  EXPECT_EQ(run("kernelize " + path("claw.cisl") + " --rules colorpack --k 2").code, 3);
  EXPECT_EQ(run("kernelize " + path("e1.cisl") + " --rules signature").code, 3);
}

TEST_F(Cli, BenchCsv) {
  const Outcome r = run("bench --sweep gamma --from 2 --to 4 --n 200 --c 30 --repeats 2");
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# jisolve-bench v1");
  std::getline(in, line);
  EXPECT_EQ(line, "algo,n,gamma,c,Q,ell,time_ms,peak_mem_bytes,value");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8);
  }
  EXPECT_EQ(rows, 6);
}
