#pragma once

#include <string>
#include <utility>
#include <vector>

namespace twreg::verify {

struct CheckReport {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> metadata;

  CheckReport() = default;
  CheckReport(std::string n, double r, double tol) : name(std::move(n)), residual(r), tolerance(tol) {
    passed = residual <= tolerance;
  }

  CheckReport& with(std::string key, std::string value) {
    metadata.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

/// Largest residual over a batch; fails if any member failed.
inline CheckReport aggregate(std::string name, const std::vector<CheckReport>& parts, double tolerance) {
  CheckReport r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  r.passed = true;
  const CheckReport* worst = nullptr;
  for (const auto& p : parts) {
    r.passed = r.passed && p.passed;
    if (!worst || p.residual > worst->residual) worst = &p;
  }
  if (worst) {
    r.residual = worst->residual;
    r.with("worst", worst->name);
  }
  r.passed = r.passed && r.residual <= tolerance;
  r.with("samples", std::to_string(parts.size()));
  return r;
}

}  // namespace twreg::verify
