#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded; stdout is captured.
CliResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(CROSSLAB_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CliEnumerate, ArcCensusRecords) {
  CliResult r = run("enumerate --kind arcs --max-length 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 49u);
  EXPECT_NE(r.out.find(R"({"kind":"summary","counts":{"1":3,"2":3,"3":6,"4":12,"5":24}})"), std::string::npos);
}

TEST(CliEnumerate, CurveCensusRecords) {
  EXPECT_EQ(lines(run("enumerate --kind curves --max-length 2").out), 4u);
  EXPECT_EQ(lines(run("enumerate --kind curves --max-length 4").out), 7u);
}

TEST(CliEnumerate, CapGivesExitTwo) {
  EXPECT_EQ(run("enumerate --kind arcs --max-length 5", "CROSSLAB_CAP=10").code, 2);
  CliResult r = run("enumerate --kind arcs --max-length 5", "CROSSLAB_CAP=48");
  EXPECT_EQ(r.code, 0);
}

TEST(CliEnumerate, SpectrumCsv) {
  CliResult r = run("enumerate --kind curves --max-length 4 --spectrum");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "word,combinatorial_length,hyperbolic_length");
  EXPECT_EQ(lines(r.out), 7u);
}

TEST(CliIntersect, CurvePairs) {
  EXPECT_EQ(run("intersect --word 1,2 --word 1,3").out, "0\n");
  EXPECT_EQ(run("intersect --word 1,2,1,3 --self").out, "1\n");
  EXPECT_EQ(run("intersect --word 1,2,3,1,2,3 --word 1,2,1,3").out, "4\n");
  EXPECT_EQ(run("intersect --word 1,2,3,1,2,3 --word 1,2,1,3 --oracle").out, "4\n");
  EXPECT_EQ(run("--format json intersect --word 1,2 --word 1,3").out, "{\"u\":\"1,2\",\"v\":\"1,3\",\"intersection\":0}\n");
}

TEST(CliIntersect, InvalidWordsGiveExitThree) {
  EXPECT_EQ(run("intersect --word 1,1 --word 1,2").code, 3);
  EXPECT_EQ(run("intersect --word 1,2,1,2 --self").code, 3);
  EXPECT_EQ(run("intersect --word 1,4 --word 1,2").code, 3);
  EXPECT_EQ(run("intersect --start f1 --interior 1 --end b1 --self").code, 3);
  EXPECT_EQ(run("intersect --start z9 --interior 3 --end b1 --self").code, 3);
}

TEST(CliIntersect, Arcs) {
  EXPECT_EQ(run("intersect --start f1 --interior 3 --end b1 --start f2 --interior 1 --end b2").out, "2\n");
  EXPECT_EQ(run("intersect --start f1 --interior - --end f2 --start f1 --interior 3 --end b1 --oracle").out, "0\n");
  EXPECT_EQ(run("intersect --start b1 --interior 3,2 --end b3 --self").out, "1\n");
}

TEST(CliIntersect, CensusMatrix) {
  std::string path = ::testing::TempDir() + "crosslab_matrix.csv";
  CliResult r = run("intersect --census curves --max-length 6 --matrix " + path);
  ASSERT_EQ(r.code, 0);
  std::string csv = slurp(path);
  EXPECT_EQ(lines(csv), 17u);
  EXPECT_TRUE(csv.starts_with("class,\"1,2\",\"1,3\",\"2,3\",")) << csv.substr(0, 40);
  EXPECT_NE(csv.find("\n\"1,2,1,3\",0,0,0,2,2,2,"), std::string::npos);
}

TEST(CliFamily, JsonWithCrossing) {
  CliResult r = run("family --construction sphere-arcs --punctures 5 --max-length 5 --crossing");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"construction\": \"sphere-arcs\""), std::string::npos);
  EXPECT_NE(r.out.find("\"size\": 12"), std::string::npos);
  EXPECT_NE(r.out.find("\"crossing\": 54"), std::string::npos);
}

TEST(CliVerify, FamilyFileRoundTrip) {
  std::string path = ::testing::TempDir() + "crosslab_family.json";
  ASSERT_EQ(run("--output " + path + " family --construction pants-curves --max-length 6").code, 0);
  CliResult r = run("--format table verify --family " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pants-curves-upper"), std::string::npos);
}

TEST(CliVerify, ExitCodes) {
  EXPECT_EQ(run("verify --suite census-counts --max-length 12").code, 0);
  EXPECT_EQ(run("verify --suite quadratic-lemma --max-length 8").code, 0);
  EXPECT_EQ(run("verify --suite doubling").code, 1);
  EXPECT_EQ(run("verify --suite census-counts --max-length 12", "CROSSLAB_CAP=100").code, 2);
}

TEST(CliVerify, OutputIndependentOfJobs) {
  CliResult a = run("--jobs 1 verify --suite upper-bounds --max-length 6");
  CliResult b = run("--jobs 4 verify --suite upper-bounds --max-length 6");
  EXPECT_EQ(a.code, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
}

TEST(CliBounds, EvaluatesAndJudges) {
  CliResult r = run("--format csv bounds --theorem sphere-arcs-upper --m 12 --punctures 5 --observed 54");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sphere-arcs-upper,upper,1200,54,true,Holds"), std::string::npos);
  EXPECT_EQ(run("bounds --theorem sphere-arcs-upper --m 12 --punctures 5 --observed 1201").code, 1);
  EXPECT_NE(run("bounds --theorem curves-lower --m 2194 --chi -1").out.find("37631.69"), std::string::npos);
  EXPECT_NE(run("bounds --theorem curves-lower --m 2194").code, 0);
}

TEST(CliGlobal, SeedlessAndUnknownCommand) {
  EXPECT_EQ(run("--seedless intersect --word 1,2 --word 1,3").out, "0\n");
  EXPECT_NE(run("frobnicate").code, 0);
}
