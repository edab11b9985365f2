#pragma once

#include <array>
#include <cmath>

#include "loopforge/scalar.hpp"

namespace loopforge {

// Forward-mode 2-jet over up to 3 base variables: value, gradient and
// symmetric Hessian propagate through arithmetic, so field code gets exact
// (to roundoff) first and second derivatives of analytic expressions.
struct Jet {
  static constexpr int kDim = 3;
  double v = 0.0;
  std::array<double, 3> g{};
  std::array<double, 6> h{};  // packed upper triangle: (0,0),(0,1),(0,2),(1,1),(1,2),(2,2)

  Jet() = default;
  Jet(double value) : v(value) {}

  static int hidx(int i, int j) {
    if (i > j) std::swap(i, j);
    static constexpr int base[3] = {0, 3, 5};
    return base[i] + (j - i);
  }

  static Jet variable(double value, int i) {
    Jet j(value);
    j.g[i] = 1.0;
    return j;
  }

  Jet& operator+=(const Jet& o) {
    v += o.v;
    for (int i = 0; i < 3; ++i) g[i] += o.g[i];
    for (int i = 0; i < 6; ++i) h[i] += o.h[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v -= o.v;
    for (int i = 0; i < 3; ++i) g[i] -= o.g[i];
    for (int i = 0; i < 6; ++i) h[i] -= o.h[i];
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(const Jet& a) {
    Jet r;
    r.v = -a.v;
    for (int i = 0; i < 3; ++i) r.g[i] = -a.g[i];
    for (int i = 0; i < 6; ++i) r.h[i] = -a.h[i];
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    r.v = a.v * b.v;
    for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        int k = hidx(i, j);
        r.h[k] = a.h[k] * b.v + a.g[i] * b.g[j] + a.g[j] * b.g[i] + a.v * b.h[k];
      }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet r;
    double inv = 1.0 / b.v;
    r.v = a.v * inv;
    for (int i = 0; i < 3; ++i) r.g[i] = (a.g[i] - r.v * b.g[i]) * inv;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        int k = hidx(i, j);
        r.h[k] = (a.h[k] - r.v * b.h[k] - r.g[i] * b.g[j] - r.g[j] * b.g[i]) * inv;
      }
    return r;
  }

  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }
};

// Composition with a univariate function given its value and first two
// derivatives at the inner value.
inline Jet jet_compose(const Jet& x, double f, double fp, double fpp) {
  Jet r;
  r.v = f;
  for (int i = 0; i < 3; ++i) r.g[i] = fp * x.g[i];
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      int k = Jet::hidx(i, j);
      r.h[k] = fp * x.h[k] + fpp * x.g[i] * x.g[j];
    }
  return r;
}

inline Jet sin(const Jet& x) { return jet_compose(x, std::sin(x.v), std::cos(x.v), -std::sin(x.v)); }
inline Jet cos(const Jet& x) { return jet_compose(x, std::cos(x.v), -std::sin(x.v), -std::cos(x.v)); }
inline Jet sqrt(const Jet& x) {
  double s = std::sqrt(x.v);
  return jet_compose(x, s, 0.5 / s, -0.25 / (s * x.v));
}

// cos(sqrt(u)) and sin(sqrt(u))/sqrt(u) as analytic functions of u, finite at
// u = 0. Used to evaluate exp on the imaginary subspace without a 0/0.
inline void cos_sqrt_coeffs(double u, double& f, double& fp, double& fpp) {
  if (u > 1e-2) {
    double r = std::sqrt(u);
    f = std::cos(r);
    fp = -std::sin(r) / (2.0 * r);
    fpp = (std::sin(r) / r - std::cos(r)) / (4.0 * u);
  } else {
    // C(u) = sum c_n u^n,  c_n = (-1)^n/(2n)!
    f = 1.0;
    fp = 0.0;
    fpp = 0.0;
    double c = 1.0, p1 = 1.0, p2 = 1.0;  // c_n, u^(n-1), u^(n-2)
    for (int n = 1; n <= 12; ++n) {
      c *= -1.0 / ((2.0 * n) * (2.0 * n - 1.0));
      fp += n * c * p1;
      if (n >= 2) fpp += n * (n - 1.0) * c * p2;
      if (n >= 2) p2 *= u;
      p1 *= u;
      f += c * p1;
    }
  }
}

inline void sinc_sqrt_coeffs(double u, double& f, double& fp, double& fpp) {
  if (u > 1e-2) {
    double r = std::sqrt(u);
    double s = std::sin(r), c = std::cos(r);
    f = s / r;
    fp = (c * r - s) / (2.0 * u * r);
    fpp = (3.0 * s - 3.0 * r * c - r * r * s) / (4.0 * u * u * r);
  } else {
    // S(u) = sum s_n u^n,  s_n = (-1)^n/(2n+1)!
    f = 1.0;
    fp = 0.0;
    fpp = 0.0;
    double c = 1.0, p1 = 1.0, p2 = 1.0;
    for (int n = 1; n <= 12; ++n) {
      c *= -1.0 / ((2.0 * n) * (2.0 * n + 1.0));
      fp += n * c * p1;
      if (n >= 2) fpp += n * (n - 1.0) * c * p2;
      if (n >= 2) p2 *= u;
      p1 *= u;
      f += c * p1;
    }
  }
}

inline double cos_sqrt(double u) {
  double f, fp, fpp;
  cos_sqrt_coeffs(u, f, fp, fpp);
  return f;
}

inline double sinc_sqrt(double u) {
  double f, fp, fpp;
  sinc_sqrt_coeffs(u, f, fp, fpp);
  return f;
}

inline Jet exp(const Jet& x) {
  double e = std::exp(x.v);
  return jet_compose(x, e, e, e);
}

inline Jet cos_sqrt(const Jet& u) {
  double f, fp, fpp;
  cos_sqrt_coeffs(u.v, f, fp, fpp);
  return jet_compose(u, f, fp, fpp);
}

inline Jet sinc_sqrt(const Jet& u) {
  double f, fp, fpp;
  sinc_sqrt_coeffs(u.v, f, fp, fpp);
  return jet_compose(u, f, fp, fpp);
}

inline double to_double(const Jet& j) { return j.v; }
inline bool is_zero(const Jet& j) { return j.v == 0.0; }
inline double pivot_mag(const Jet& j) { return std::fabs(j.v); }

template <>
struct ScalarTraits<Jet> {
  static constexpr bool exact = false;
  static Jet zero() { return Jet(0.0); }
  static Jet one() { return Jet(1.0); }
  static Jet from_int(long n) { return Jet(static_cast<double>(n)); }
};

}  // namespace loopforge
