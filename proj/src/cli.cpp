#include "superflow/cli.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <vector>

#include "superflow/flow_kernel.hpp"
#include "superflow/report.hpp"
#include "superflow/superflow_engine.hpp"
#include "superflow/symmetry.hpp"

namespace superflow {
namespace {

std::string format_translation_sample(const TranslationSample& s) {
  return "p=" + format_point(s.p) + " t=" + format_complex(s.t) + " s=" + format_complex(s.s);
}

std::vector<ClosedFormFlow> selected_flows(const RunConfig& config) {
  if (config.family.empty()) return flow_catalog();
  return {ClosedFormFlow::from_name(config.family, config.k)};
}

std::vector<SymmetryFamily> selected_families(const RunConfig& config) {
  if (!config.family.empty()) return {SymmetryFamily::from_name(config.family, config.k)};
  return {{FamilyKind::gamma_4k3, 1}, {FamilyKind::gamma_4k3, 2}, {FamilyKind::gamma_4k1, 1},
          {FamilyKind::gamma_4k1, 2}, {FamilyKind::delta_tilde, 1}, {FamilyKind::gamma_sph, 1}};
}

void emit_records(const std::vector<VerificationRecord>& records, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::tsv) {
    out << "flow\tcheck\tn_samples\tmax_residual\ttolerance\tpassed\tseed\tworst_sample\n";
  }
  for (const auto& r : records) {
    switch (format) {
      case OutputFormat::json:
        out << to_json(r).dump() << '\n';
        break;
      case OutputFormat::text:
        out << to_text(r) << '\n';
        break;
      case OutputFormat::tsv: {
        char residual[32];
        std::snprintf(residual, sizeof residual, "%.6e", r.max_residual);
        out << r.flow << '\t' << r.check << '\t' << r.n_samples << '\t' << residual << '\t' << r.tolerance << '\t'
            << (r.passed ? "true" : "false") << '\t' << r.seed << '\t' << r.worst_sample << '\n';
        break;
      }
    }
  }
}

bool all_passed(const std::vector<VerificationRecord>& records) {
  for (const auto& r : records) {
    if (!r.passed) return false;
  }
  return true;
}

int classify(const RunConfig& config, std::ostream& out) {
  auto [lo, hi] = config.m.value_or(std::pair{3, 20});
  auto rows = classify_alpha(lo, hi);
  bool ok = true;
  for (const auto& row : rows) {
    ok = ok && (row.verdict.status == VerdictStatus::superflow) == (row.m % 4 != 0);
  }
  if (config.format == OutputFormat::json) {
    for (const auto& entry : classification_json(rows)) out << entry.dump() << '\n';
  } else {
    out << classification_tsv(rows);
  }
  return ok ? kExitPass : kExitCheckFailed;
}

int solve(const RunConfig& config, std::ostream& out) {
  if (!config.m || config.m->first != config.m->second) throw UsageError("solve needs a single --m");
  const int m = config.m->first;
  FiniteMatrixGroup group = alpha_group(m);
  SuperflowVerdict v = find_superflow(group);
  if (config.format == OutputFormat::json) {
    ClassificationRow row{m, group.order(), v, m % 4 == 2 ? std::optional<int>(m / 2) : std::nullopt};
    out << classification_json({row}).front().dump() << '\n';
    return kExitPass;
  }
  if (config.format == OutputFormat::tsv) {
    ClassificationRow row{m, group.order(), v, m % 4 == 2 ? std::optional<int>(m / 2) : std::nullopt};
    out << classification_tsv({row});
    return kExitPass;
  }
  const std::string order = "|Γ| = " + std::to_string(group.order());
  switch (v.status) {
    case VerdictStatus::superflow:
      out << "superflow: " << v.field->to_string() << ", denom degree " << *v.denom_degree << ", " << order << '\n';
      break;
    case VerdictStatus::not_unique:
      out << "not_unique: " << v.dimension << "-dimensional space at denom degree " << *v.denom_degree << ", "
          << order << '\n';
      break;
    case VerdictStatus::none:
      if (v.negative_identity_shortcut) {
        out << "none: -I is in the group, " << order << '\n';
      } else {
        out << "none: no invariant field up to denom degree " << group.order() << ", " << order << '\n';
      }
      break;
  }
  return kExitPass;
}

std::vector<VerificationRecord> verify_flow(const RunConfig& config) {
  const std::size_t n = config.samples.value_or(200);
  std::vector<VerificationRecord> records;
  for (const auto& flow : selected_flows(config)) {
    const bool exact = flow.family == FlowFamily::parabolic || flow.family == FlowFamily::level0;
    auto samples = translation_samples(flow, n, config.seed);
    Residual r = verify_translation(flow, samples);
    VerificationRecord rec;
    rec.flow = flow.name();
    rec.check = "translation";
    rec.n_samples = n;
    rec.max_residual = r.max_residual;
    rec.tolerance = config.tol.value_or(exact ? 1e-10 : 1e-9);
    rec.worst_sample = samples.empty() ? "-" : format_translation_sample(samples[r.worst_index]);
    rec.passed = r.max_residual <= rec.tolerance;
    rec.seed = config.seed;
    records.push_back(rec);

    const RatVF field = closed_form_field(flow);
    auto points = field_samples(flow, n, config.seed);
    VerificationRecord fr;
    fr.flow = flow.name();
    fr.check = "vector_field";
    fr.n_samples = n;
    fr.tolerance = 1e-7;
    fr.seed = config.seed;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      double rel = field_extraction_error(flow, field, points[i]);
      if (rel > fr.max_residual) {
        fr.max_residual = rel;
        worst = i;
      }
    }
    fr.worst_sample = points.empty() ? "-" : "p=" + format_point(points[worst]);
    fr.passed = fr.max_residual <= fr.tolerance;
    records.push_back(fr);
  }
  return records;
}

std::vector<VerificationRecord> verify_pde_records(const RunConfig& config) {
  const std::size_t n = config.samples.value_or(200);
  std::vector<VerificationRecord> records;
  for (const auto& flow : selected_flows(config)) {
    auto samples = pde_samples(flow, n, config.seed);
    Residual r = verify_pde(flow, closed_form_field(flow), samples);
    VerificationRecord rec;
    rec.flow = flow.name();
    rec.check = "pde";
    rec.n_samples = n;
    rec.max_residual = r.max_residual;
    rec.tolerance = config.tol.value_or(1e-6);
    rec.worst_sample = samples.empty() ? "-" : "p=" + format_point(samples[r.worst_index]);
    rec.passed = r.max_residual <= rec.tolerance;
    rec.seed = config.seed;
    records.push_back(rec);
  }
  return records;
}

std::vector<VerificationRecord> orbit_records(const RunConfig& config) {
  struct Case {
    OrbitFunction w;
    RatVF field;
    ClosedFormFlow sample_flow;
    Point start;
    double t_end;
  };
  const std::vector<Case> cases{
      {{OrbitKind::coordinate_y}, closed_form_field({FlowFamily::radical_x, 1}), {FlowFamily::radical_x, 1},
       {1.0, 0.5}, 1.0},
      {{OrbitKind::coordinate_x}, closed_form_field({FlowFamily::radical_y, 1}), {FlowFamily::radical_y, 1},
       {0.5, 1.0}, 1.0},
      {{OrbitKind::nonalgebraic_example}, RatVF::parse("x^2 + x*y + y^2 • x*y + y^2"), {FlowFamily::radical_y, 1},
       {1.0, 1.0}, 0.1},
  };
  const std::size_t n = config.samples.value_or(100);
  const double tol = config.tol.value_or(1e-6);
  std::vector<VerificationRecord> records;
  for (const auto& c : cases) {
    const int steps = 1000;
    auto path = integrate_trajectory(c.field, c.start, c.t_end, steps);
    VerificationRecord drift;
    drift.flow = c.field.to_string();
    drift.check = "orbit_drift " + c.w.name();
    drift.n_samples = path.size();
    drift.max_residual = orbit_residual(c.w, path);
    drift.tolerance = tol;
    drift.worst_sample = "start=" + format_point(c.start);
    drift.passed = drift.max_residual <= tol;
    drift.seed = config.seed;
    records.push_back(drift);

    // radical_x samples keep |x| >= 0.5 and radical_y samples keep |y| >= 0.5
    auto samples = field_samples(c.sample_flow, n, config.seed);
    Residual r = verify_orbit_ode(c.w, c.field, samples);
    VerificationRecord ode;
    ode.flow = c.field.to_string();
    ode.check = "orbit_ode " + c.w.name();
    ode.n_samples = n;
    ode.max_residual = r.max_residual;
    ode.tolerance = tol;
    ode.worst_sample = samples.empty() ? "-" : "p=" + format_point(samples[r.worst_index]);
    ode.passed = r.max_residual <= tol;
    ode.seed = config.seed;
    records.push_back(ode);
  }
  return records;
}

int symmetry(const RunConfig& config, std::ostream& out) {
  const std::size_t draws = config.samples.value_or(20);
  bool ok = true;
  std::uint64_t seed = config.seed;
  for (const auto& fam : selected_families(config)) {
    for (const auto& report : {verify_family(fam, draws, seed), falsify_family(fam, draws, seed + 1)}) {
      ok = ok && report.all_passed;
      if (config.format == OutputFormat::json) {
        auto j = to_json(report);
        j["k"] = fam.k;
        out << j.dump() << '\n';
      } else {
        out << to_text(report) << " (k=" << fam.k << ")\n";
      }
    }
    seed += 2;
  }
  return ok ? kExitPass : kExitCheckFailed;
}

int selftest(const RunConfig& config, std::ostream& out) {
  bool ok = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    CriterionResult r = run_criterion(id, config.seed);
    ok = ok && r.passed;
    if (config.format == OutputFormat::json) {
      nlohmann::json j{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seed", config.seed}};
      out << j.dump() << '\n';
    } else {
      out << format_result(r) << '\n';
    }
    out.flush();
  }
  if (config.format != OutputFormat::json) out << (ok ? "all criteria passed" : "some criteria FAILED") << ", seed " << config.seed << '\n';
  return ok ? kExitPass : kExitCheckFailed;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::classify:
      return classify(config, out);
    case Command::solve:
      return solve(config, out);
    case Command::verify_flow:
    case Command::verify_pde:
    case Command::orbits: {
      auto records = config.command == Command::verify_flow  ? verify_flow(config)
                     : config.command == Command::verify_pde ? verify_pde_records(config)
                                                             : orbit_records(config);
      emit_records(records, config.format, out);
      return all_passed(records) ? kExitPass : kExitCheckFailed;
    }
    case Command::symmetry:
      return symmetry(config, out);
    case Command::selftest:
      return selftest(config, out);
  }
  throw UsageError("unknown command");
}

}  // namespace

Command parse_command(const std::string& text) {
  if (text == "classify") return Command::classify;
  if (text == "solve") return Command::solve;
  if (text == "verify-flow") return Command::verify_flow;
  if (text == "verify-pde") return Command::verify_pde;
  if (text == "orbits") return Command::orbits;
  if (text == "symmetry") return Command::symmetry;
  if (text == "selftest") return Command::selftest;
  throw UsageError("unknown command '" + text + "'");
}

OutputFormat parse_format(const std::string& text) {
  if (text == "tsv") return OutputFormat::tsv;
  if (text == "json") return OutputFormat::json;
  if (text == "text") return OutputFormat::text;
  throw UsageError("unknown format '" + text + "' (expected tsv, json or text)");
}

std::pair<int, int> parse_m_range(const std::string& text) {
  static const std::regex pattern(R"(\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw UsageError("bad m value '" + text + "' (expected N or lo..hi)");
  try {
    int lo = std::stoi(match[1].str());
    int hi = match[2].matched ? std::stoi(match[2].str()) : lo;
    if (lo < 3 || hi < lo) throw UsageError("m range must satisfy 3 <= lo <= hi");
    return {lo, hi};
  } catch (const std::out_of_range&) {
    throw UsageError("m value out of range '" + text + "'");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.k < 1) throw UsageError("--k must be >= 1");
    if (config.samples && *config.samples == 0) throw UsageError("--samples must be positive");
    if (config.tol && !(*config.tol > 0.0)) throw UsageError("--tol must be positive");
    if (config.out_path.empty()) return dispatch(config, out);
    std::ostringstream buffer;
    int status = dispatch(config, buffer);
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + config.out_path + "'");
    file << buffer.str();
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "engine error: " << e.what() << '\n';
    return kExitEngineError;
  }
}

}  // namespace superflow
