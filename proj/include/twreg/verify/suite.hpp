#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "twreg/errors.hpp"
#include "twreg/verify/properties.hpp"

namespace twreg::verify {

inline constexpr std::uint64_t default_seed = 20240611;

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<std::vector<CheckReport>(std::uint64_t)> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "regression", 1.0, [](std::uint64_t) { return verdict_regression(); }},
      {2, "invariance", 10.0, [](std::uint64_t s) { return invariance_suite(s); }},
      {3, "wronskian", 1.0, [](std::uint64_t s) { return wronskian_suite(s); }},
      {4, "identities", 5.0, [](std::uint64_t s) { return identity_suite(s); }},
      {5, "gamma", 1.0, [](std::uint64_t s) { return gamma_identity_suite(s); }},
      {6, "orders", 10.0, [](std::uint64_t) { return asymptotic_order_suite(); }},
      {7, "ode", 60.0, [](std::uint64_t s) { return ode_suite(s); }},
      {8, "solution-asymptotics", 10.0, [](std::uint64_t) { return solution_asymptotics_suite(); }},
      {9, "transform", 30.0, [](std::uint64_t) { return transform_suite(); }},
      {10, "plane", 1.0, [](std::uint64_t s) { return plane_constancy_suite(s); }},
      {11, "quadrature", 10.0, [](std::uint64_t) { return quadrature_suite(); }},
  };
  return list;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names{"default"};
  for (const auto& c : criteria()) names.push_back(c.name);
  return names;
}

struct CriterionOutcome {
  const Criterion* criterion = nullptr;
  std::vector<CheckReport> reports;
  double seconds = 0.0;
  bool passed() const {
    return !reports.empty() &&
           std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  }
};

inline CriterionOutcome run_criterion(const Criterion& c, std::uint64_t seed) {
  CriterionOutcome out;
  out.criterion = &c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    out.reports = c.run(seed);
  } catch (const std::exception& e) {
    out.reports.push_back(CheckReport(c.name + "/exception", INFINITY, 0.0).with("error", e.what()));
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

/// Runs the named suite ("default" runs all) with up to `jobs` criteria in flight.
inline std::vector<CriterionOutcome> run_suite(const std::string& suite, std::uint64_t seed, int jobs = 1) {
  std::vector<const Criterion*> selected;
  for (const auto& c : criteria())
    if (suite == "default" || suite == c.name) selected.push_back(&c);
  if (selected.empty()) throw domain_error("unknown suite: " + suite);
  std::vector<CriterionOutcome> out(selected.size());
  const std::size_t width = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t start = 0; start < selected.size(); start += width) {
    std::vector<std::future<CriterionOutcome>> batch;
    for (std::size_t k = start; k < std::min(selected.size(), start + width); ++k)
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, run_criterion,
                                 std::cref(*selected[k]), seed));
    for (std::size_t k = 0; k < batch.size(); ++k) out[start + k] = batch[k].get();
  }
  return out;
}

/// All reports of a run, ordered by name.
inline std::vector<CheckReport> flatten_sorted(const std::vector<CriterionOutcome>& outcomes) {
  std::vector<CheckReport> all;
  for (const auto& o : outcomes) all.insert(all.end(), o.reports.begin(), o.reports.end());
  std::stable_sort(all.begin(), all.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return all;
}

}  // namespace twreg::verify
