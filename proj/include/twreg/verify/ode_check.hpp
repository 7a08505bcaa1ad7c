#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "twreg/errors.hpp"
#include "twreg/operators.hpp"
#include "twreg/verify/report.hpp"

namespace twreg::verify {

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  int samples_per_side = 120;
  std::size_t max_steps = 200000;
};

/// Integrates B u = 0 from x = 0 and compares with the analytic basis on [lo, hi].
/// Deviation at x is |u_ode - u| over the running maximum of |u| between 0 and x.
inline CheckReport ode_cross_check(const WeylSymbol& b, cplx c1, cplx c2, double lo, double hi,
                                   const OdeOptions& opt = {}) {
  namespace odeint = boost::numeric::odeint;
  using state = std::array<cplx, 2>;
  const SolutionBasis basis(b);
  const cplx i(0.0, 1.0);
  auto rhs = [&](const state& y, state& dy, double x) {
    dy[0] = y[1];
    dy[1] = (-i * (b.b11 * x + b.b10) * y[1] + (b.b02 * x * x + b.b01 * x + b.b00) * y[0]) / b.b20;
  };
  const auto init = eval_solution_full(basis, c1, c2, 0.0);
  double worst = 0.0;
  for (double end : {lo, hi}) {
    if (end == 0.0) continue;
    std::vector<double> xs;
    for (int k = 0; k <= opt.samples_per_side; ++k) xs.push_back(end * k / opt.samples_per_side);
    std::vector<cplx> got;
    state y{init.u, init.du};
    auto stepper = odeint::make_dense_output(opt.atol, opt.rtol, odeint::runge_kutta_dopri5<state>());
    try {
      odeint::integrate_times(stepper, rhs, y, xs.begin(), xs.end(), end / opt.samples_per_side,
                              [&](const state& s, double) { got.push_back(s[0]); },
                              odeint::max_step_checker(opt.max_steps));
    } catch (const std::exception& e) {
      throw stiffness_error(std::string("ode_cross_check: integrator stalled: ") + e.what());
    }
    double running = 0.0;
    for (std::size_t k = 0; k < xs.size() && k < got.size(); ++k) {
      const cplx want = eval_solution(basis, c1, c2, xs[k]);
      running = std::max(running, std::abs(want));
      if (running == 0.0) continue;
      worst = std::max(worst, std::abs(got[k] - want) / running);
    }
  }
  CheckReport r("ode_cross_check", worst, 1e-6);
  r.with("case", to_string(basis.kind()));
  return r;
}

}  // namespace twreg::verify
