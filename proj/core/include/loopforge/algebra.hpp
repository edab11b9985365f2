#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopforge/jet.hpp"
#include "loopforge/matrix.hpp"

namespace loopforge {

enum class AlgebraTag : int { R = 0, C = 1, H = 2, O = 3 };

inline int alg_dim(AlgebraTag t) { return 1 << static_cast<int>(t); }
inline std::string alg_name(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::R: return "R";
    case AlgebraTag::C: return "C";
    case AlgebraTag::H: return "H";
    default: return "O";
  }
}

// Basis multiplication table e_i e_j = sign[i][j] * e_{idx[i][j]}, generated
// by the Cayley-Dickson doubling (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
// with e_{dim/2} as the doubling unit (so e_4 doubles H to O).
struct MulTable {
  int dim = 1;
  std::array<std::array<int8_t, 8>, 8> sign{};
  std::array<std::array<int8_t, 8>, 8> idx{};

  static const MulTable& get(AlgebraTag tag);

  // Test fixture: same table with the (a,b) entry's sign flipped.
  MulTable corrupted(int a, int b) const {
    MulTable t = *this;
    t.sign[a][b] = -t.sign[a][b];
    return t;
  }
};

// Structure tensors on the imaginary units of O (degenerate analogs for C, H):
// phi[a][b][c] = <e_a e_b, e_c> and psi from the ternary bracket
// x(yz) - (xy)z, both with entries in {-1, 0, 1}; indices run over 1..dim-1.
struct StructureTensors {
  AlgebraTag tag = AlgebraTag::O;
  // Indexed [a][b][c] / [a][b][c][d] with 1-based imaginary indices; slot 0 unused.
  std::vector<int8_t> phi;   // dim^3
  std::vector<int8_t> psi;   // dim^4
  std::array<std::array<int8_t, 8>, 8> cross_sign{};  // a x b = 1/2 [e_a, e_b]
  std::array<std::array<int8_t, 8>, 8> cross_idx{};

  int dim = 8;
  int8_t phi_at(int a, int b, int c) const { return phi[(a * dim + b) * dim + c]; }
  int8_t psi_at(int a, int b, int c, int d) const {
    return psi[((a * dim + b) * dim + c) * dim + d];
  }

  static const StructureTensors& get(AlgebraTag tag);
};

// Element of a composition algebra; coords[0] is the real part.
template <typename T>
struct AVec {
  AlgebraTag tag = AlgebraTag::O;
  std::array<T, 8> c{};

  AVec() { c.fill(ScalarTraits<T>::zero()); }
  explicit AVec(AlgebraTag t) : tag(t) { c.fill(ScalarTraits<T>::zero()); }

  int dim() const { return alg_dim(tag); }

  static AVec zero(AlgebraTag t) { return AVec(t); }
  static AVec one(AlgebraTag t) {
    AVec v(t);
    v.c[0] = ScalarTraits<T>::one();
    return v;
  }
  static AVec unit(AlgebraTag t, int i) {
    AVec v(t);
    v.c[i] = ScalarTraits<T>::one();
    return v;
  }

  AVec& operator+=(const AVec& o) {
    for (int i = 0; i < dim(); ++i) c[i] += o.c[i];
    return *this;
  }
  AVec& operator-=(const AVec& o) {
    for (int i = 0; i < dim(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend AVec operator+(AVec a, const AVec& b) { return a += b; }
  friend AVec operator-(AVec a, const AVec& b) { return a -= b; }
  friend AVec operator-(const AVec& a) {
    AVec r(a.tag);
    for (int i = 0; i < a.dim(); ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend AVec operator*(const T& s, AVec v) {
    for (int i = 0; i < v.dim(); ++i) v.c[i] = s * v.c[i];
    return v;
  }
};

template <typename T>
AVec<T> mul(const MulTable& tbl, const AVec<T>& a, const AVec<T>& b) {
  AVec<T> r(a.tag);
  for (int i = 0; i < tbl.dim; ++i) {
    if (is_zero(a.c[i])) continue;
    for (int j = 0; j < tbl.dim; ++j) {
      if (is_zero(b.c[j])) continue;
      T term = a.c[i] * b.c[j];
      if (tbl.sign[i][j] < 0)
        r.c[tbl.idx[i][j]] -= term;
      else
        r.c[tbl.idx[i][j]] += term;
    }
  }
  return r;
}

template <typename T>
AVec<T> mul(const AVec<T>& a, const AVec<T>& b) {
  if (a.tag != b.tag) throw std::invalid_argument("mul: algebra tag mismatch");
  return mul(MulTable::get(a.tag), a, b);
}

template <typename T>
AVec<T> conj(const AVec<T>& a) {
  AVec<T> r = a;
  for (int i = 1; i < a.dim(); ++i) r.c[i] = -r.c[i];
  return r;
}

template <typename T>
T norm2(const AVec<T>& a) {
  T s = ScalarTraits<T>::zero();
  for (int i = 0; i < a.dim(); ++i) s += a.c[i] * a.c[i];
  return s;
}

template <typename T>
AVec<T> inverse(const AVec<T>& a) {
  T n = norm2(a);
  if (is_zero(n)) throw std::runtime_error("inverse: zero norm");
  AVec<T> r = conj(a);
  for (int i = 0; i < a.dim(); ++i) r.c[i] = r.c[i] / n;
  return r;
}

template <typename T>
AVec<T> alg_commutator(const AVec<T>& a, const AVec<T>& b) {
  return mul(a, b) - mul(b, a);
}

// (ab)c - a(bc)
template <typename T>
AVec<T> alg_associator(const AVec<T>& a, const AVec<T>& b, const AVec<T>& c) {
  return mul(mul(a, b), c) - mul(a, mul(b, c));
}

template <typename T>
AVec<T> im(const AVec<T>& a) {
  AVec<T> r = a;
  r.c[0] = ScalarTraits<T>::zero();
  return r;
}

template <typename T>
AVec<double> to_double_vec(const AVec<T>& a) {
  AVec<double> r(a.tag);
  for (int i = 0; i < a.dim(); ++i) r.c[i] = to_double(a.c[i]);
  return r;
}

inline AVec<Rational> to_rational_vec(const AVec<long>&) = delete;

template <typename T>
double max_abs(const AVec<T>& a) {
  double m = 0;
  for (int i = 0; i < a.dim(); ++i) m = std::max(m, std::fabs(to_double(a.c[i])));
  return m;
}

template <typename T>
double euclid_norm(const AVec<T>& a) {
  double s = 0;
  for (int i = 0; i < a.dim(); ++i) {
    double d = to_double(a.c[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

// Closed-form exponential on a composition algebra:
// exp(a + x) = e^a (C(|x|^2) + S(|x|^2) x) with C = cos(sqrt(u)),
// S = sin(sqrt(u))/sqrt(u); works over double and Jet scalars.
template <typename T>
AVec<T> alg_exp(const AVec<T>& v) {
  T u = ScalarTraits<T>::zero();
  for (int i = 1; i < v.dim(); ++i) u += v.c[i] * v.c[i];
  using std::exp;
  T ea = exp(v.c[0]);
  T cu = T(cos_sqrt(u));
  T su = T(sinc_sqrt(u));
  AVec<T> r(v.tag);
  r.c[0] = ea * cu;
  for (int i = 1; i < v.dim(); ++i) r.c[i] = ea * su * v.c[i];
  return r;
}

// Deterministic sampling helper. Draws go through explicit modulo reduction on
// raw mt19937_64 output so that identical seeds give identical streams on any
// platform; identity suites default to rational coordinates with numerators
// in [-9, 9] and denominators in [1, 9].
class SampleRng {
 public:
  explicit SampleRng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  long int_in(long lo, long hi) {  // inclusive
    uint64_t span = static_cast<uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(raw() % span);
  }

  Rational rational_coord() {
    long num = int_in(-9, 9);
    long den = int_in(1, 9);
    return rat(num, den);
  }

  double real_in(double lo, double hi) {
    double u = static_cast<double>(raw() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  AVec<Rational> rational_value(AlgebraTag tag) {
    AVec<Rational> v(tag);
    for (int i = 0; i < v.dim(); ++i) v.c[i] = rational_coord();
    return v;
  }

  AVec<double> double_value(AlgebraTag tag) {
    AVec<double> v(tag);
    for (int i = 0; i < v.dim(); ++i) v.c[i] = real_in(-1.0, 1.0);
    return v;
  }

  template <typename T>
  AVec<T> algebra_value(AlgebraTag tag) {
    if constexpr (ScalarTraits<T>::exact)
      return rational_value(tag);
    else
      return double_value(tag);
  }

  // Nonzero (invertible) rational sample.
  AVec<Rational> invertible(AlgebraTag tag) {
    for (;;) {
      AVec<Rational> v = rational_value(tag);
      if (!is_zero(norm2(v))) return v;
    }
  }

  AVec<double> unit(AlgebraTag tag) {
    for (;;) {
      AVec<double> v(tag);
      for (int i = 0; i < v.dim(); ++i) v.c[i] = real_in(-1.0, 1.0);
      double n = euclid_norm(v);
      if (n > 1e-3) {
        for (int i = 0; i < v.dim(); ++i) v.c[i] /= n;
        return v;
      }
    }
  }

  AVec<double> imaginary(AlgebraTag tag, double amplitude = 1.0) {
    AVec<double> v(tag);
    for (int i = 1; i < v.dim(); ++i) v.c[i] = real_in(-amplitude, amplitude);
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace loopforge
