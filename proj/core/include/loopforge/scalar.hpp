#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

namespace loopforge {

// Exact rational scalar. Arithmetic is closed and lossless; comparisons are
// exact. Float-mode code paths use plain double and must compare through an
// explicit tolerance.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

// Pivot magnitude for Gaussian elimination: exact compare for rationals,
// absolute value for doubles.
inline Rational pivot_mag(const Rational& r) { return abs(r); }
inline double pivot_mag(double x) { return std::fabs(x); }

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long n) { return Rational(n); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long n) { return static_cast<double>(n); }
};

}  // namespace loopforge
