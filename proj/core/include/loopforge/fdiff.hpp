#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace loopforge {

// Finite differencing with Richardson extrapolation. Realizes the various
// d/dt|_0 limits used throughout: first derivatives of curves, and nested
// second/third mixed partials over independent parameters.
struct DiffConfig {
  double h = 1e-2;      // base step
  int levels = 2;       // Richardson levels; level L has order 2L
  double tol = 1e-8;
};

struct DiffResult {
  std::vector<double> value;
  double observed_order = 0.0;  // estimated from successive step halvings
};

namespace detail {

inline std::vector<double> axpy(double a, const std::vector<double>& x, double b,
                                const std::vector<double>& y) {
  std::vector<double> r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
  return r;
}

inline double vec_dist(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0;
  for (size_t i = 0; i < x.size(); ++i) s = std::max(s, std::fabs(x[i] - y[i]));
  return s;
}

inline void check_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) throw std::runtime_error("fd_derivative: non-finite sample");
}

// Central difference at step h, then a Richardson triangle over halved steps.
inline std::vector<double> richardson(const std::function<std::vector<double>(double)>& central,
                                      double h, int levels) {
  std::vector<std::vector<double>> row(levels);
  for (int i = 0; i < levels; ++i) row[i] = central(h / double(1 << i));
  for (int m = 1; m < levels; ++m) {
    double f = std::pow(4.0, m);
    for (int i = levels - 1; i >= m; --i) row[i] = axpy(f / (f - 1.0), row[i], -1.0 / (f - 1.0), row[i - 1]);
  }
  return row[levels - 1];
}

}  // namespace detail

// First derivative of a vector-valued curve at t0.
inline DiffResult fd_derivative(const std::function<std::vector<double>(double)>& f, double t0,
                                const DiffConfig& cfg = {}) {
  auto central = [&](double h) {
    auto fp = f(t0 + h);
    auto fm = f(t0 - h);
    detail::check_finite(fp);
    detail::check_finite(fm);
    return detail::axpy(0.5 / h, fp, -0.5 / h, fm);
  };
  DiffResult r;
  r.value = detail::richardson(central, cfg.h, cfg.levels);
  // Observed order from three step scales of the full extrapolated scheme.
  auto d0 = detail::richardson(central, cfg.h, cfg.levels);
  auto d1 = detail::richardson(central, cfg.h / 2, cfg.levels);
  auto d2 = detail::richardson(central, cfg.h / 4, cfg.levels);
  double e01 = detail::vec_dist(d0, d1), e12 = detail::vec_dist(d1, d2);
  if (e12 > 0 && e01 > 0) r.observed_order = std::log2(e01 / e12);
  r.value = d2;
  return r;
}

inline double fd_derivative_scalar(const std::function<double(double)>& f, double t0,
                                   const DiffConfig& cfg = {}) {
  auto wrapped = [&](double t) { return std::vector<double>{f(t)}; };
  return fd_derivative(wrapped, t0, cfg).value[0];
}

// Mixed second partial d^2/(dt dtau) at (0,0) by nesting central differences
// with equal steps in the independent parameters.
inline std::vector<double> fd_mixed2(const std::function<std::vector<double>(double, double)>& f,
                                     const DiffConfig& cfg = {}) {
  auto central = [&](double h) {
    auto pp = f(h, h);
    auto pm = f(h, -h);
    auto mp = f(-h, h);
    auto mm = f(-h, -h);
    detail::check_finite(pp);
    detail::check_finite(mm);
    std::vector<double> r(pp.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (pp[i] - pm[i] - mp[i] + mm[i]) / (4.0 * h * h);
    return r;
  };
  return detail::richardson(central, cfg.h, cfg.levels);
}

// Mixed third partial d^3/(dt dtau dtau') at the origin.
inline std::vector<double> fd_mixed3(
    const std::function<std::vector<double>(double, double, double)>& f, const DiffConfig& cfg = {}) {
  auto central = [&](double h) {
    std::vector<double> r;
    for (int st = -1; st <= 1; st += 2)
      for (int su = -1; su <= 1; su += 2)
        for (int sv = -1; sv <= 1; sv += 2) {
          auto sample = f(st * h, su * h, sv * h);
          detail::check_finite(sample);
          if (r.empty()) r.assign(sample.size(), 0.0);
          double sign = st * su * sv;
          for (size_t i = 0; i < r.size(); ++i) r[i] += sign * sample[i] / (8.0 * h * h * h);
        }
    return r;
  };
  return detail::richardson(central, cfg.h, cfg.levels);
}

}  // namespace loopforge
