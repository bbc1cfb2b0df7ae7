#include "superflow/report.hpp"

#include <cstdio>

namespace superflow {
namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return fixed(z.real());
  std::string im = fixed(std::abs(z.imag()));
  return fixed(z.real()) + (z.imag() < 0 ? " - " : " + ") + im + "i";
}

std::string format_point(const Point& p) { return "(" + format_complex(p.x) + ", " + format_complex(p.y) + ")"; }

nlohmann::json to_json(const VerificationRecord& record) {
  return {{"flow", record.flow},
          {"check", record.check},
          {"n_samples", record.n_samples},
          {"max_residual", record.max_residual},
          {"tolerance", record.tolerance},
          {"worst_sample", record.worst_sample},
          {"passed", record.passed},
          {"seed", record.seed}};
}

nlohmann::json to_json(const SymmetryReport& report) {
  return {{"flow", report.subject},
          {"family", report.family},
          {"mode", report.mode},
          {"n_draws", report.n_draws},
          {"all_passed", report.all_passed},
          {"worst_residual", report.worst_residual},
          {"seed", report.seed}};
}

std::string to_text(const VerificationRecord& record) {
  return (record.passed ? "PASS " : "FAIL ") + record.flow + " " + record.check + ": max residual " +
         sci(record.max_residual) + " (tol " + sci(record.tolerance) + ") over " +
         std::to_string(record.n_samples) + " samples, worst at " + record.worst_sample + ", seed " +
         std::to_string(record.seed);
}

std::string to_text(const SymmetryReport& report) {
  const bool members = report.mode == "members";
  return (report.all_passed ? "PASS " : "FAIL ") + report.family + " on " + report.subject + ": " +
         std::to_string(report.n_draws) + (members ? " member draws, worst residual " : " off-family draws, smallest residual ") +
         sci(report.worst_residual) + ", seed " + std::to_string(report.seed);
}

}  // namespace superflow
