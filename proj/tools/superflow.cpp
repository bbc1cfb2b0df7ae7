#include <iostream>

#include "CLI11.hpp"

#include "superflow/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Projective superflows: classification, construction and numeric verification"};
  app.set_version_flag("--version", "superflow 1.0.0");

  std::string command;
  std::string m_text, m_range, family, out_path, format = "text";
  int k = 1;
  std::size_t samples = 0;
  std::uint64_t seed = superflow::kAcceptanceSeed;
  double tol = 0.0;

  app.add_option("command", command, "classify | solve | verify-flow | verify-pde | orbits | symmetry | selftest")
      ->required();
  auto* m_opt = app.add_option("--m", m_text, "m or lo..hi");
  auto* range_opt = app.add_option("--m-range", m_range, "lo..hi");
  m_opt->excludes(range_opt);
  app.add_option("--k", k, "family index for radical flows and diagonal symmetry families");
  app.add_option("--family", family, "flow family or symmetry family (default: all)");
  auto* samples_opt = app.add_option("--samples", samples, "sample count (symmetry: draws per family)");
  app.add_option("--seed", seed, "random seed");
  auto* tol_opt = app.add_option("--tol", tol, "tolerance override");
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--format", format, "tsv | json | text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : superflow::kExitUsage;
  }

  superflow::RunConfig config;
  try {
    config.command = superflow::parse_command(command);
    config.format = superflow::parse_format(format);
    if (!m_text.empty()) config.m = superflow::parse_m_range(m_text);
    if (!m_range.empty()) config.m = superflow::parse_m_range(m_range);
  } catch (const superflow::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return superflow::kExitUsage;
  }
  config.k = k;
  config.family = family;
  if (samples_opt->count() > 0) config.samples = samples;
  if (tol_opt->count() > 0) config.tol = tol;
  config.seed = seed;
  config.out_path = out_path;
  return superflow::run(config, std::cout, std::cerr);
}
