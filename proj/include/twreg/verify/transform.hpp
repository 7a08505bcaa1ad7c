#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <fftw3.h>

#include "twreg/branchcut.hpp"
#include "twreg/errors.hpp"
#include "twreg/operators.hpp"
#include "twreg/verify/report.hpp"

namespace twreg::verify {

/// Samples on the periodic grid x_k = -L + k h, h = 2L/n, stored row-major with x as the row index.
struct Grid2D {
  int n = 0;
  double L = 0.0;
  std::vector<cplx> data;

  Grid2D() = default;
  Grid2D(int n_, double L_) : n(n_), L(L_), data(static_cast<std::size_t>(n_) * n_) {}

  double h() const { return 2.0 * L / n; }
  double coord(int k) const { return -L + k * h(); }
  cplx& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
  const cplx& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }

  static Grid2D sample(int n, double L, const std::function<cplx(double, double)>& f) {
    Grid2D g(n, L);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = f(g.coord(i), g.coord(j));
    return g;
  }

  double l2() const {
    double s = 0.0;
    for (const auto& v : data) s += std::norm(v);
    return std::sqrt(s);
  }

  double edge_max() const {
    double m = 0.0;
    for (int k = 0; k < n; ++k)
      m = std::max({m, std::abs((*this)(0, k)), std::abs((*this)(n - 1, k)), std::abs((*this)(k, 0)),
                    std::abs((*this)(k, n - 1))});
    return m;
  }
};

inline double relative_l2(const Grid2D& a, const Grid2D& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.data.size(); ++k) {
    num += std::norm(a.data[k] - b.data[k]);
    den += std::norm(b.data[k]);
  }
  return std::sqrt(num / den);
}

struct TransformOptions {
  int interp_points = 6;  // tensor-product Lagrange nodes per axis; 4 is bicubic
};

namespace detail {

// Lagrange weights for the interp_points nodes around position s; nodes outside the grid read as 0.
struct Stencil {
  int first = 0;
  double w[8] = {};
  int count = 0;
};

inline Stencil stencil(double s, double L, double h, int n, int points) {
  Stencil st;
  st.count = points;
  const double q = (s + L) / h;
  const int base = static_cast<int>(std::floor(q)) - (points / 2 - 1);
  st.first = base;
  if (base + points <= 0 || base >= n) {
    st.count = 0;
    return st;
  }
  for (int a = 0; a < points; ++a) {
    double w = 1.0;
    for (int b = 0; b < points; ++b)
      if (b != a) w *= (q - (base + b)) / static_cast<double>(a - b);
    st.w[a] = w;
  }
  return st;
}

inline cplx interp2(const Grid2D& u, double x, double y, int points) {
  const auto sx = stencil(x, u.L, u.h(), u.n, points);
  if (sx.count == 0) return 0.0;
  const auto sy = stencil(y, u.L, u.h(), u.n, points);
  if (sy.count == 0) return 0.0;
  cplx acc(0.0, 0.0);
  for (int a = 0; a < points; ++a) {
    const int i = sx.first + a;
    if (i < 0 || i >= u.n) continue;
    cplx row(0.0, 0.0);
    for (int b = 0; b < points; ++b) {
      const int j = sy.first + b;
      if (j < 0 || j >= u.n) continue;
      row += sy.w[b] * u(i, j);
    }
    acc += sx.w[a] * row;
  }
  return acc;
}

}  // namespace detail

/// (T u)(x, y) = (2 pi)^{-1/2} int e^{-izy} u(beta x + alpha z, beta x + beta gamma delta^{-1} z) dz.
inline Grid2D transform_T(const Grid2D& u, const TwistedFrame& f, const TransformOptions& opt = {}) {
  f.validate();
  const int n = u.n;
  const double h = u.h();
  const double c2 = f.beta * f.gamma / f.delta;
  const double reach = std::max(std::abs(f.alpha), std::abs(c2));
  const double Z = (1.0 + std::abs(f.beta)) * u.L / reach + 4.0 * h;
  const int nz = static_cast<int>(std::ceil(Z / h));
  std::vector<double> zs;
  for (int m = -nz; m <= nz; ++m) zs.push_back(m * h);
  std::vector<cplx> phase(zs.size() * n);
  for (std::size_t m = 0; m < zs.size(); ++m)
    for (int j = 0; j < n; ++j) phase[m * n + j] = std::exp(cplx(0.0, -zs[m] * u.coord(j)));
  Grid2D out(n, u.L);
  const double w = h / std::sqrt(2.0 * pi);
  std::vector<cplx> g(zs.size());
  for (int i = 0; i < n; ++i) {
    const double x = u.coord(i);
    for (std::size_t m = 0; m < zs.size(); ++m)
      g[m] = detail::interp2(u, f.beta * x + f.alpha * zs[m], f.beta * x + c2 * zs[m], opt.interp_points);
    for (std::size_t m = 0; m < zs.size(); ++m) {
      if (g[m] == cplx(0.0, 0.0)) continue;
      const cplx gm = w * g[m];
      const cplx* ph = &phase[m * n];
      for (int j = 0; j < n; ++j) out(i, j) += gm * ph[j];
    }
  }
  return out;
}

/// (T^{-1} v)(x, y) = (2 pi)^{-1/2} int e^{i t delta (x - y)} v(alpha delta beta^{-1} y - gamma x, t) dt.
inline Grid2D transform_T_inverse(const Grid2D& v, const TwistedFrame& f, const TransformOptions& opt = {}) {
  f.validate();
  const int n = v.n;
  const double h = v.h();
  const double c = f.alpha * f.delta / f.beta;
  const double w = h / std::sqrt(2.0 * pi);
  Grid2D out(n, v.L);
  for (int i = 0; i < n; ++i) {
    const double x = v.coord(i);
    for (int k = 0; k < n; ++k) {
      const double y = v.coord(k);
      const auto st = detail::stencil(c * y - f.gamma * x, v.L, h, n, opt.interp_points);
      if (st.count == 0) continue;
      const double omega = f.delta * (x - y);
      const cplx step = std::exp(cplx(0.0, omega * h));
      cplx ph = std::exp(cplx(0.0, omega * v.coord(0)));
      cplx acc(0.0, 0.0);
      for (int j = 0; j < n; ++j) {
        cplx s(0.0, 0.0);
        for (int a = 0; a < st.count; ++a) {
          const int r = st.first + a;
          if (r >= 0 && r < n) s += st.w[a] * v(r, j);
        }
        acc += ph * s;
        ph *= step;
      }
      out(i, k) = w * acc;
    }
  }
  return out;
}

/// Spectral d/dx (axis 0) or d/dy (axis 1).
inline Grid2D spectral_derivative(const Grid2D& g, int axis) {
  const int n = g.n;
  Grid2D out = g;
  auto* buf = reinterpret_cast<fftw_complex*>(out.data.data());
  const int stride = axis == 0 ? n : 1;
  const int dist = axis == 0 ? 1 : n;
  int dims[1] = {n};
  fftw_plan fwd = fftw_plan_many_dft(1, dims, n, buf, nullptr, stride, dist, buf, nullptr, stride, dist,
                                     FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_plan bwd = fftw_plan_many_dft(1, dims, n, buf, nullptr, stride, dist, buf, nullptr, stride, dist,
                                     FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(fwd);
  const double dk = 2.0 * pi / (n * g.h());
  for (int line = 0; line < n; ++line) {
    for (int m = 0; m < n; ++m) {
      const int k = m < n / 2 ? m : (m == n / 2 ? 0 : m - n);
      const std::size_t idx = axis == 0 ? static_cast<std::size_t>(m) * n + line
                                        : static_cast<std::size_t>(line) * n + m;
      out.data[idx] *= cplx(0.0, dk * k) / static_cast<double>(n);
    }
  }
  fftw_execute(bwd);
  fftw_destroy_plan(fwd);
  fftw_destroy_plan(bwd);
  return out;
}

enum class TestInput { Gaussian, Hermite };

inline Grid2D test_input(TestInput kind, int n, double L) {
  return Grid2D::sample(n, L, [kind](double x, double y) {
    const double g = std::exp(-0.5 * (x * x + y * y));
    return cplx(kind == TestInput::Gaussian ? g : x * g, 0.0);
  });
}

inline const char* to_string(TestInput t) { return t == TestInput::Gaussian ? "gaussian" : "hermite"; }

inline CheckReport transform_roundtrip_check(TestInput kind, const TwistedFrame& f, int n = 256,
                                             double L = 10.0, const TransformOptions& opt = {}) {
  const Grid2D u = test_input(kind, n, L);
  const Grid2D back = transform_T_inverse(transform_T(u, f, opt), f, opt);
  CheckReport r(std::string("transform_roundtrip_") + to_string(kind), relative_l2(back, u), 1e-6);
  r.with("n", std::to_string(n)).with("L", std::to_string(L));
  if (u.edge_max() > 1e-12) r.with("warning", "input has boundary mass");
  return r;
}

/// T(x u) against (-alpha D_y + beta M_x) T u.
inline CheckReport intertwining_M_check(TestInput kind, const TwistedFrame& f, int n = 256, double L = 10.0,
                                        const TransformOptions& opt = {}) {
  const Grid2D u = test_input(kind, n, L);
  Grid2D xu = u;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) xu(i, j) *= u.coord(i);
  const Grid2D lhs = transform_T(xu, f, opt);
  const Grid2D Tu = transform_T(u, f, opt);
  const Grid2D dy = spectral_derivative(Tu, 1);
  Grid2D rhs(n, L);
  const cplx i(0.0, 1.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rhs(a, b) = -f.alpha * (-i * dy(a, b)) + f.beta * Tu.coord(a) * Tu(a, b);
  return CheckReport(std::string("intertwining_M_") + to_string(kind), relative_l2(rhs, lhs), 1e-5);
}

/// T(D_x u) against (-gamma D_x + delta M_y) T u.
inline CheckReport intertwining_D_check(TestInput kind, const TwistedFrame& f, int n = 256, double L = 10.0,
                                        const TransformOptions& opt = {}) {
  const cplx i(0.0, 1.0);
  const Grid2D u = test_input(kind, n, L);
  Grid2D Du = spectral_derivative(u, 0);
  for (auto& v : Du.data) v *= -i;
  const Grid2D lhs = transform_T(Du, f, opt);
  const Grid2D Tu = transform_T(u, f, opt);
  const Grid2D dx = spectral_derivative(Tu, 0);
  Grid2D rhs(n, L);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rhs(a, b) = -f.gamma * (-i * dx(a, b)) + f.delta * Tu.coord(b) * Tu(a, b);
  return CheckReport(std::string("intertwining_D_") + to_string(kind), relative_l2(rhs, lhs), 1e-5);
}

}  // namespace twreg::verify
