#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "superflow/cli.hpp"

using namespace superflow;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_config(const RunConfig& config) {
  std::ostringstream out, err;
  int status = run(config, out, err);
  return {status, out.str(), err.str()};
}

RunConfig make(Command command) {
  RunConfig c;
  c.command = command;
  return c;
}

}  // namespace

TEST(Cli, ClassifyTable) {
  auto c = make(Command::classify);
  c.m = parse_m_range("3..12");
  auto r = run_config(c);
  EXPECT_EQ(r.status, kExitPass);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "m\tgroup_order\tstatus\tdenom_degree\tfield\treduction");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    int m = std::stoi(line.substr(0, line.find('\t')));
    bool superflow = line.find("\tsuperflow\t") != std::string::npos;
    EXPECT_EQ(superflow, m % 4 != 0) << line;
  }
  EXPECT_EQ(rows, 10);
}

TEST(Cli, ClassifyJsonLines) {
  auto c = make(Command::classify);
  c.m = parse_m_range("5..7");
  c.format = OutputFormat::json;
  auto r = run_config(c);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(lines, line)) rows.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2]["field"], "y^4/x^2 • 0");
  EXPECT_EQ(rows[1]["reduction"], 3);
}

TEST(Cli, SolveSeven) {
  auto c = make(Command::solve);
  c.m = parse_m_range("7");
  auto r = run_config(c);
  EXPECT_EQ(r.status, kExitPass);
  EXPECT_EQ(r.out, "superflow: y^4/x^2 • 0, denom degree 2, |Γ| = 14\n");
  c.m = parse_m_range("8");
  EXPECT_EQ(run_config(c).out, "none: -I is in the group, |Γ| = 8\n");
}

TEST(Cli, VerifyFlowParabolic) {
  auto c = make(Command::verify_flow);
  c.family = "parabolic";
  c.samples = 100;
  c.seed = 1;
  c.format = OutputFormat::json;
  auto r = run_config(c);
  EXPECT_EQ(r.status, kExitPass);
  auto first = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
  EXPECT_EQ(first["check"], "translation");
  EXPECT_LE(first["max_residual"].get<double>(), 1e-10);
  EXPECT_EQ(first["seed"], 1);
  EXPECT_EQ(first["n_samples"], 100);
}

TEST(Cli, TightToleranceFails) {
  auto c = make(Command::verify_pde);
  c.family = "radical_x";
  c.samples = 50;
  c.tol = 1e-30;
  EXPECT_EQ(run_config(c).status, kExitCheckFailed);
}

TEST(Cli, SameSeedSameReport) {
  for (Command command : {Command::verify_flow, Command::verify_pde, Command::orbits}) {
    auto c = make(command);
    c.samples = 30;
    c.seed = 77;
    auto a = run_config(c);
    auto b = run_config(c);
    EXPECT_EQ(a.status, kExitPass);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("seed 77"), std::string::npos);
  }
  auto s = make(Command::symmetry);
  s.family = "gamma_4k3";
  s.samples = 4;
  s.seed = 5;
  EXPECT_EQ(run_config(s).out, run_config(s).out);
  EXPECT_EQ(run_config(s).status, kExitPass);
}

TEST(Cli, DifferentSeedsDifferentSamples) {
  auto c = make(Command::verify_pde);
  c.family = "level0";
  c.samples = 10;
  c.seed = 1;
  auto a = run_config(c);
  c.seed = 2;
  auto b = run_config(c);
  EXPECT_NE(a.out, b.out);
}

TEST(Cli, WritesToOutFile) {
  auto c = make(Command::solve);
  c.m = parse_m_range("5");
  c.out_path = testing::TempDir() + "/superflow_solve.txt";
  auto r = run_config(c);
  EXPECT_EQ(r.status, kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(c.out_path);
  std::string content((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, "superflow: 0 • x^3/y, denom degree 1, |Γ| = 10\n");
  std::remove(c.out_path.c_str());
}

TEST(Cli, UsageErrors) {
  EXPECT_THROW(parse_command("frobnicate"), UsageError);
  EXPECT_THROW(parse_format("xml"), UsageError);
  EXPECT_THROW(parse_m_range("2..5"), UsageError);
  EXPECT_THROW(parse_m_range("9..4"), UsageError);
  EXPECT_THROW(parse_m_range("seven"), UsageError);
  EXPECT_EQ(parse_m_range("3..20"), std::pair(3, 20));
  EXPECT_EQ(parse_m_range("11"), std::pair(11, 11));

  auto solve = make(Command::solve);
  solve.m = parse_m_range("3..5");
  EXPECT_EQ(run_config(solve).status, kExitUsage);
  auto flow = make(Command::verify_flow);
  flow.family = "spiral";
  auto r = run_config(flow);
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("spiral"), std::string::npos);
  auto k = make(Command::verify_flow);
  k.k = 0;
  EXPECT_EQ(run_config(k).status, kExitUsage);
}
