#pragma once

#include <cmath>

#include "twreg/branchcut.hpp"

namespace twreg {

struct AsymptoticEval {
  cplx value{0.0, 0.0};
  int terms_used = 0;
  bool sector_ok = false;
  // Magnitude of the first omitted term, prefactor included.
  double est_remainder = 0.0;
  // Set when the Gamma prefactor vanishes identically.
  bool degenerate = false;
};

inline constexpr double default_sector_eps = 0.1;

}  // namespace twreg
