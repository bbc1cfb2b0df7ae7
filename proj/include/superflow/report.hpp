#pragma once

// Verification records and their serializations: one JSON object per line
// for machines, aligned text for people.

#include <cstdint>
#include <string>

#include "json.hpp"

#include "superflow/numeric.hpp"
#include "superflow/symmetry.hpp"

namespace superflow {

struct VerificationRecord {
  std::string flow;
  std::string check;
  std::size_t n_samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string worst_sample;
  bool passed = false;
  std::uint64_t seed = 0;
};

std::string format_complex(Complex z);
std::string format_point(const Point& p);

nlohmann::json to_json(const VerificationRecord& record);
nlohmann::json to_json(const SymmetryReport& report);

std::string to_text(const VerificationRecord& record);
std::string to_text(const SymmetryReport& report);

}  // namespace superflow
