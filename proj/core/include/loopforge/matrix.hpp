#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "loopforge/jet.hpp"
#include "loopforge/scalar.hpp"

namespace loopforge {

// Small dense row-major matrix over double, Rational or Jet scalars. All the
// linear algebra in this project is tiny (at most ~512x64), so plain Gaussian
// elimination and Jacobi eigensolves are enough.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, ScalarTraits<T>::zero()) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ScalarTraits<T>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix& operator+=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.a_) x = s * x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  double fro_norm() const {
    double s = 0;
    for (const auto& x : a_) {
      double d = to_double(x);
      s += d * d;
    }
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0;
    for (const auto& x : a_) m = std::max(m, std::fabs(to_double(x)));
    return m;
  }

 private:
  int rows_, cols_;
  std::vector<T> a_;
};

// Solves A X = B by Gaussian elimination with partial pivoting. Throws on a
// singular system (exact zero pivot in rational mode, pivot below eps * scale
// in float mode).
template <typename T>
Matrix<T> solve(Matrix<T> a, Matrix<T> b) {
  const int n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: dimension mismatch");
  for (int col = 0; col < n; ++col) {
    int piv = col;
    auto best = pivot_mag(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      auto m = pivot_mag(a(r, col));
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (!(best > 0)) throw std::runtime_error("solve: singular system");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      for (int j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(piv, j));
    }
    for (int r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      T f = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      for (int j = 0; j < b.cols(); ++j) b(r, j) -= f * b(col, j);
    }
  }
  Matrix<T> x(n, b.cols());
  for (int i = n - 1; i >= 0; --i)
    for (int j = 0; j < b.cols(); ++j) {
      T s = b(i, j);
      for (int k = i + 1; k < n; ++k) s -= a(i, k) * x(k, j);
      x(i, j) = s / a(i, i);
    }
  return x;
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

// Exact kernel basis of a rational matrix via reduced row echelon form.
// Returned vectors are the standard free-variable basis (not orthonormal).
inline std::vector<std::vector<Rational>> nullspace_exact(Matrix<Rational> m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivot_col_of_row;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m(r, j), m(piv, j));
    Rational d = m(r, c);
    for (int j = 0; j < cols; ++j) m(r, j) /= d;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Rational f = m(i, c);
      for (int j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[c] = 1;
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) v[pivot_col_of_row[i]] = -m(static_cast<int>(i), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Cyclic Jacobi eigensolver for a symmetric matrix. Returns eigenvalues in
// `evals` and eigenvectors as columns of the returned matrix.
inline Matrix<double> sym_eigen(Matrix<double> s, std::vector<double>& evals) {
  const int n = s.rows();
  Matrix<double> v = Matrix<double>::identity(n);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += s(i, j) * s(i, j);
    if (off < 1e-300) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(s(p, q)) < 1e-300) continue;
        double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), sn = t * c;
        for (int k = 0; k < n; ++k) {
          double skp = s(k, p), skq = s(k, q);
          s(k, p) = c * skp - sn * skq;
          s(k, q) = sn * skp + c * skq;
        }
        for (int k = 0; k < n; ++k) {
          double spk = s(p, k), sqk = s(q, k);
          s(p, k) = c * spk - sn * sqk;
          s(q, k) = sn * spk + c * sqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
  }
  evals.resize(n);
  for (int i = 0; i < n; ++i) evals[i] = s(i, i);
  return v;
}

// Orthonormal kernel basis of a float matrix: eigenvectors of m^T m whose
// singular values fall below rel_tol times the largest singular value.
inline std::vector<std::vector<double>> nullspace_double(const Matrix<double>& m,
                                                         double rel_tol = 1e-10) {
  Matrix<double> mtm = m.transpose() * m;
  std::vector<double> evals;
  Matrix<double> vecs = sym_eigen(mtm, evals);
  double max_ev = 0;
  for (double e : evals) max_ev = std::max(max_ev, e);
  double cut = (max_ev > 0 ? max_ev : 1.0) * rel_tol * rel_tol;
  std::vector<std::vector<double>> basis;
  for (size_t i = 0; i < evals.size(); ++i) {
    if (evals[i] > cut) continue;
    std::vector<double> v(m.cols());
    for (int r = 0; r < m.cols(); ++r) v[r] = vecs(r, static_cast<int>(i));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Matrix exponential by scaling-and-squaring with a truncated Taylor series.
// Works over double and Jet scalars; relative error well below 1e-12 for
// norms up to ~10 after scaling.
template <typename T>
Matrix<T> mat_exp(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("mat_exp: square matrix required");
  const int n = m.rows();
  double norm = 0;
  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j) row += std::fabs(to_double(m(i, j)));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.25 && squarings < 62) {
    norm *= 0.5;
    ++squarings;
  }
  T scale = ScalarTraits<T>::one() / ScalarTraits<T>::from_int(1L << squarings);
  Matrix<T> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j) * scale;
  Matrix<T> sum = Matrix<T>::identity(n);
  Matrix<T> term = Matrix<T>::identity(n);
  for (int k = 1; k <= 24; ++k) {
    term = term * a;
    T inv_k = ScalarTraits<T>::one() / ScalarTraits<T>::from_int(k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) term(i, j) = term(i, j) * inv_k;
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace loopforge
