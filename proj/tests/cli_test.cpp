#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + SEMIPRIMARY_CLI + " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int st = ::pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(SEMIPRIMARY_FIXTURES) + "/" + name + ".json"; }

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ClassifyExample) {
  Outcome r = run("classify --ring zn:12 --ideal gen:6");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "semiprimary: no; delta: ∞")) << r.out;
  Outcome j = run("--json classify --ring zn:12 --ideal gen:6");
  auto v = nlohmann::json::parse(j.out);
  EXPECT_EQ(v["semiprimary"], false);
  EXPECT_EQ(v["delta"], "inf");
  EXPECT_EQ(v["ideal"], "(6)");
}

TEST(Cli, ClassifyAtN) {
  Outcome r = run("--json classify --fixture " + fixture("z4xz2_zero_by_z2") + " --n 2");
  ASSERT_EQ(r.status, 0) << r.out;
  auto v = nlohmann::json::parse(r.out);
  EXPECT_EQ(v["at_n"]["n_semiprimary"], true);
  EXPECT_EQ(v["prime"], false);
  EXPECT_EQ(v["contains_nil"], false);
}

TEST(Cli, TableRow) {
  Outcome r = run("table --group Z+Q");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "Z+Q | between P and M | n-semiprimary: no")) << r.out;
  EXPECT_TRUE(has(r.out, "Z+Q | below P | n-semiprimary: yes")) << r.out;
  auto v = nlohmann::json::parse(run("--json table --group Z+Q").out);
  EXPECT_EQ(v.size(), 5u);
  for (const auto& row : v) EXPECT_TRUE(has(r.out, row["group"].get<std::string>() + " | " + row["family"].get<std::string>()));
}

TEST(Cli, DeltaBarProfile) {
  Outcome r = run("delta-bar --spec " + fixture("z2_x2_x5") + " --nmax 8");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "refuted: {1,3}")) << r.out;
  auto v = nlohmann::json::parse(run("--json delta-bar --spec " + fixture("z2_x2_x5") + " --nmax 8").out);
  EXPECT_EQ(v["refuted"], nlohmann::json({1, 3}));
  EXPECT_EQ(v["profile"][2]["witness"]["x^n"], "X^3");
}

TEST(Cli, DeltaForms) {
  EXPECT_TRUE(has(run("delta --pid 12").out, "delta: ∞"));
  EXPECT_TRUE(has(run("delta --pid 49").out, "delta: 2"));
  EXPECT_TRUE(has(run("delta --pid F2[t]:t^3").out, "delta: 3"));
  EXPECT_TRUE(has(run("delta --ring zn:8 --ideal gen:4").out, "delta: 2"));
  EXPECT_EQ(nlohmann::json::parse(run("--json delta --vd \"Z+Q cut=0,1/3\"").out)["delta"], "inf");
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check --spec " + fixture("cusp_z2") + " --property n-VD --n 2").status, 0);
  EXPECT_EQ(run("check --spec " + fixture("cusp_z2") + " --property n-VD --n 3").status, 2);
  EXPECT_EQ(run("check --spec " + fixture("residue_tower_p3_k4") + " --property n-PVD --n 2 --budget 10").status, 3);
  EXPECT_EQ(run("check --spec " + fixture("cusp_z2") + " --property nonsense").status, 64);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 64);
  EXPECT_EQ(run("frobnicate").status, 64);
  EXPECT_EQ(run("classify").status, 64);
  EXPECT_EQ(run("classify --fixture " + fixture("cusp_z2")).status, 64);
  EXPECT_EQ(run("classify --ring zn:").status, 64);
  EXPECT_EQ(run("delta-bar --spec /no/such/file.json").status, 64);
  EXPECT_EQ(run("audit --checks no-such-check --profile small").status, 64);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, SearchWitnesses) {
  Outcome a = run("search --monomial '2:2:X^2;Y^2' --kind absorbing --n 2 --degree 1 --terms 2");
  EXPECT_EQ(a.status, 2);
  EXPECT_TRUE(has(a.out, "not 2-absorbing")) << a.out;
  Outcome p = run("--json search --monomial '2:2:X*Y;Y^3' --kind primary --degree 1 --terms 1");
  EXPECT_EQ(p.status, 2);
  EXPECT_EQ(nlohmann::json::parse(p.out)["found"], true);
  EXPECT_EQ(run("search --ring zn:12 --ideal gen:6 --n 1").status, 2);
  EXPECT_EQ(run("search --ring zn:9 --ideal gen:3 --n 1").status, 0);
}

TEST(Cli, ColonAndClosure) {
  Outcome c = run("colon --spec " + fixture("z3_x9_x12"));
  EXPECT_TRUE(has(c.out, "colon: F3 + X^3 F3[[X]]")) << c.out;
  Outcome k = run("--json closure --spec " + fixture("conductor_n3") + " --n 3");
  auto v = nlohmann::json::parse(k.out);
  EXPECT_EQ(v["closure"], "F2[[X]]");
  EXPECT_EQ(v["root_set_is_radical"], true);
}

TEST(Cli, AuditSubsetAndThreads) {
  std::string args = "--json audit --profile small --checks power-scaling,cusp-parity --no-timing";
  Outcome one = run(args);
  Outcome four = run(args, "THREADS=4");
  EXPECT_EQ(one.status, 0);
  EXPECT_EQ(one.out, four.out);
  auto v = nlohmann::json::parse(one.out);
  EXPECT_EQ(v["refutations"], 0);
  EXPECT_FALSE(v.contains("timing"));
  Outcome text = run("audit --profile small --checks cusp-parity --strict --threads 2");
  EXPECT_EQ(text.status, 0);
  EXPECT_TRUE(has(text.out, "ok   cusp-parity")) << text.out;
}
