#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

/// Runs the CLI with stderr merged into stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string(TROPCOMP_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(TROPCOMP_DATA) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tropcomp_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Value after "key: " in a line-oriented report.
std::string field(const std::string& report, const std::string& key) {
  const auto p = report.find(key + ": ");
  if (p == std::string::npos) return "";
  const auto start = p + key.size() + 2;
  return report.substr(start, report.find('\n', start) - start);
}

}  // namespace

TEST(Cli, IntersectStructuralPair) {
  auto r = run("intersect " + data("structural_pair.trop"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(field(r.out, "nonempty"), "yes");
  const auto w = field(r.out, "witness");
  EXPECT_TRUE(w == "0,0" || w == "0,1" || w == "1,0" || w == "1,1") << w;
}

TEST(Cli, IntersectDisjointSaysNo) {
  auto r = run("intersect " + data("disjoint.trop"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "nonempty: no\n");
}

TEST(Cli, SingularAndDet) {
  auto u = run("singular " + data("unique.mat"));
  EXPECT_EQ(u.code, 1);
  EXPECT_EQ(u.out, "singular: no\n");
  auto t = run("singular " + data("tied.mat"));
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, "singular: yes\n");
  auto d = run("det " + data("tied.mat"));
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(field(d.out, "det"), "5");
}

TEST(Cli, ComponentsOfLinearSystem) {
  auto r = run("components " + data("line.trop"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "components: 1\n");
  EXPECT_EQ(run("components " + data("structural_pair.trop")).out, "components: 4\n");
}

TEST(Cli, ConnectedAndDimension) {
  auto c = run("connected " + data("structural_pair.trop"));
  EXPECT_EQ(c.code, 1);
  EXPECT_EQ(c.out, "connected: no\n");
  EXPECT_EQ(run("connected " + data("line.trop")).code, 0);
  auto e = run("connected " + data("disjoint.trop"));
  EXPECT_EQ(e.code, 2);
  EXPECT_NE(e.out.find("empty"), std::string::npos);
  EXPECT_EQ(run("dimension " + data("line.trop")).out, "dimension: 1\n");
  EXPECT_EQ(run("dimension " + data("disjoint.trop")).out, "dimension: -1\n");
}

TEST(Cli, EvalAndMember) {
  auto e = run("eval " + data("line.trop") + " -x 1/2,-1");
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "f1: value -1 argmin (0,1)\n");
  auto m = run("member " + data("line.trop") + " -x 0,0");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out, "member: yes\n");
  EXPECT_EQ(run("member " + data("line.trop") + " --point 1,2").code, 1);
  EXPECT_EQ(run("member " + data("line.trop") + " -x 1,2,3").code, 2);
  EXPECT_EQ(run("member " + data("line.trop") + " -x 1.5,2").code, 2);
}

TEST(Cli, ConsistencyLinear) {
  auto r = run("consistency-linear " + data("linear_pair.trop"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "consistent: yes\n");
}

TEST(Cli, ParseErrorsReportLineAndColumn) {
  auto r = run("components " + data("bad.trop"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("bad.trop:2:1:"), std::string::npos) << r.out;
  EXPECT_EQ(run("components /nonexistent/file.trop").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, CapExceededExitsThree) {
  auto r = run("--cap 1 components " + data("structural_pair.trop"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("resource limit"), std::string::npos);
}

TEST(Cli, EncodeComponentsMatchesCountSat) {
  for (const char* cnf : {"or2.cnf", "one_hot.cnf", "unsat.cnf"}) {
    const auto count = field(run("count-sat " + data(cnf)).out, "count");
    const auto path = scratch(std::string(cnf) + ".trop");
    auto enc = run("encode " + data(cnf) + " --variant intersection -o " + path.string());
    ASSERT_EQ(enc.code, 0) << enc.out;
    EXPECT_EQ(field(run("components " + path.string()).out, "components"), count) << cnf;

    const auto conn = scratch(std::string(cnf) + ".conn.trop");
    ASSERT_EQ(run("encode " + data(cnf) + " --variant connectivity -o " + conn.string()).code, 0);
    EXPECT_EQ(field(run("components " + conn.string()).out, "components"),
              std::to_string(std::stoul(count) + 1));
  }
  EXPECT_EQ(field(run("count-sat " + data("one_hot.cnf")).out, "count"), "3");
}

TEST(Cli, EncodeWritesVarMap) {
  auto r = run("encode " + data("one_hot.cnf") + " --variant consistency");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# var x4 = z (auxiliary, clause 1)"), std::string::npos);
  EXPECT_NE(r.out.find("# var x5 = height"), std::string::npos);
  EXPECT_EQ(run("encode " + data("one_hot.cnf") + " --variant bogus").code, 2);
}

TEST(Cli, PlotIsDeterministicSvg) {
  const auto a = scratch("line_a.svg"), b = scratch("line_b.svg");
  ASSERT_EQ(run("plot " + data("line.trop") + " --viewport -2,2,-2,2 -o " + a.string()).code, 0);
  ASSERT_EQ(run("plot " + data("line.trop") + " --viewport -2,2,-2,2 -o " + b.string()).code, 0);
  const auto svg = slurp(a);
  EXPECT_EQ(svg, slurp(b));
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_EQ(run("plot " + data("structural_pair.trop")).code, 2);
  EXPECT_EQ(run("plot " + data("line.trop") + " --viewport 1,0,0,1").code, 2);
}

TEST(Cli, SubdivisionJson) {
  auto r = run("subdivision " + data("line.trop"));
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["faces"].size(), 1u);
  EXPECT_EQ(doc["faces"][0]["vertices"], nlohmann::json({0, 1, 2}));
  EXPECT_EQ(doc["faces"][0]["dimension"], 2);
  EXPECT_EQ(doc["points"].size(), 3u);
}
