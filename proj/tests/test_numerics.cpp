#include <cmath>
#include <random>

#include "doctest.h"
#include "loopforge/fdiff.hpp"
#include "loopforge/jet.hpp"
#include "loopforge/matrix.hpp"
#include "loopforge/scalar.hpp"

using namespace loopforge;

TEST_CASE("rational arithmetic is exact") {
  Rational a = rat(1, 3), b = rat(1, 6);
  CHECK(a + b == rat(1, 2));
  CHECK(a * b == rat(1, 18));
  CHECK(rat(2, 4) == rat(1, 2));
}

TEST_CASE("exact solve and nullspace") {
  Matrix<Rational> m(3, 3);
  // identity: trivial kernel
  for (int i = 0; i < 3; ++i) m(i, i) = 1;
  CHECK(nullspace_exact(m).empty());

  Matrix<Rational> z(2, 2);
  CHECK(nullspace_exact(z).size() == 2);

  Matrix<Rational> a(2, 2);
  a(0, 0) = rat(2);
  a(0, 1) = rat(1);
  a(1, 0) = rat(1);
  a(1, 1) = rat(3);
  Matrix<Rational> b(2, 1);
  b(0, 0) = rat(5);
  b(1, 0) = rat(10);
  auto x = solve(a, b);
  CHECK((a * x - b).max_abs() == 0.0);  // exact zero residual
}

TEST_CASE("exact kernels satisfy m x = 0 exactly") {
  Matrix<Rational> m(2, 4);
  m(0, 0) = rat(1);
  m(0, 1) = rat(2);
  m(0, 2) = rat(-1);
  m(0, 3) = rat(3);
  m(1, 0) = rat(2);
  m(1, 1) = rat(4);
  m(1, 2) = rat(1);
  m(1, 3) = rat(0);
  auto basis = nullspace_exact(m);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) {
    for (int r = 0; r < 2; ++r) {
      Rational s = 0;
      for (int c = 0; c < 4; ++c) s += m(r, c) * v[c];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("float nullspace with rank cut") {
  Matrix<double> m(3, 3);
  m(0, 0) = 1;
  m(1, 1) = 1;  // rank 2, kernel = e3
  auto basis = nullspace_double(m);
  REQUIRE(basis.size() == 1);
  CHECK(std::fabs(std::fabs(basis[0][2]) - 1.0) < 1e-12);
}

TEST_CASE("mat_exp basics") {
  Matrix<double> zero(3, 3);
  auto e = mat_exp(zero);
  CHECK((e - Matrix<double>::identity(3)).max_abs() == 0.0);

  double t = 0.7318;
  Matrix<double> g(2, 2);
  g(0, 1) = -t;
  g(1, 0) = t;
  auto r = mat_exp(g);
  CHECK(r(0, 0) == doctest::Approx(std::cos(t)).epsilon(1e-13));
  CHECK(r(1, 0) == doctest::Approx(std::sin(t)).epsilon(1e-13));
}

TEST_CASE("mat_exp inverse identity to 1e-12 on random norms <= 1") {
  std::mt19937_64 eng(42);
  auto u = [&]() { return (double(eng() >> 11) * 0x1.0p-53) * 2.0 - 1.0; };
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<double> m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = 0.25 * u();
    auto prod = mat_exp(m) * mat_exp(Rational(-1).get_d() * m);
    CHECK((prod - Matrix<double>::identity(4)).max_abs() < 1e-12);
  }
}

TEST_CASE("fd_derivative on polynomials and sin") {
  auto sq = [](double t) { return t * t; };
  CHECK(fd_derivative_scalar(sq, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
  auto s = [](double t) { return std::sin(t); };
  CHECK(fd_derivative_scalar(s, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fd_derivative observed order >= 3.9 with 2 Richardson levels") {
  auto f = [](double t) { return std::vector<double>{std::sin(1.3 * t + 0.4)}; };
  DiffConfig cfg;
  cfg.h = 0.2;  // large enough that truncation dominates roundoff
  cfg.levels = 2;
  auto r = fd_derivative(f, 0.0, cfg);
  CHECK(r.observed_order >= 3.9);
  auto rv = fd_derivative(f, 0.0, DiffConfig{});
  CHECK(rv.value[0] == doctest::Approx(1.3 * std::cos(0.4)).epsilon(1e-10));
}

TEST_CASE("fd mixed partials") {
  // f(t,u) = sin(t) * u^2 -> d2/dtdu at 0 = 0 ; g = t*u -> 1
  auto g = [](double t, double u) { return std::vector<double>{t * u + t * t * u * u}; };
  auto d = fd_mixed2(g);
  CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-10));
  auto h3 = [](double t, double u, double v) {
    return std::vector<double>{std::sin(t) * u * v + t * t * u};
  };
  DiffConfig cfg;
  cfg.h = 5e-2;
  auto d3 = fd_mixed3(h3, cfg);
  CHECK(d3[0] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("jets propagate first and second derivatives") {
  // f(x,y) = sin(x) * y + x^2
  Jet x = Jet::variable(0.3, 0);
  Jet y = Jet::variable(1.7, 1);
  Jet f = sin(x) * y + x * x;
  CHECK(f.v == doctest::Approx(std::sin(0.3) * 1.7 + 0.09));
  CHECK(f.g[0] == doctest::Approx(std::cos(0.3) * 1.7 + 0.6));
  CHECK(f.g[1] == doctest::Approx(std::sin(0.3)));
  CHECK(f.h[Jet::hidx(0, 1)] == doctest::Approx(std::cos(0.3)));
  CHECK(f.h[Jet::hidx(0, 0)] == doctest::Approx(-std::sin(0.3) * 1.7 + 2.0));

  Jet q = f / y;
  CHECK(q.v == doctest::Approx(f.v / 1.7));

  // cos_sqrt / sinc_sqrt agree with the direct formulas away from zero and
  // stay finite at zero.
  Jet u = Jet::variable(0.5, 0);
  CHECK(cos_sqrt(u).v == doctest::Approx(std::cos(std::sqrt(0.5))).epsilon(1e-14));
  CHECK(sinc_sqrt(u).v == doctest::Approx(std::sin(std::sqrt(0.5)) / std::sqrt(0.5)).epsilon(1e-14));
  Jet z = Jet::variable(0.0, 0);
  CHECK(cos_sqrt(z).v == doctest::Approx(1.0));
  CHECK(sinc_sqrt(z).v == doctest::Approx(1.0));
  CHECK(cos_sqrt(z).g[0] == doctest::Approx(-0.5));       // d/du cos(sqrt u) at 0
  CHECK(sinc_sqrt(z).g[0] == doctest::Approx(-1.0 / 6));  // d/du sinc(sqrt u) at 0

  // series/closed-form agreement near the switch point
  for (double uu : {5e-3, 9e-3, 1.1e-2, 2e-2}) {
    double f1, fp1, fpp1;
    cos_sqrt_coeffs(uu, f1, fp1, fpp1);
    double r = std::sqrt(uu);
    CHECK(f1 == doctest::Approx(std::cos(r)).epsilon(1e-13));
    CHECK(fp1 == doctest::Approx(-std::sin(r) / (2 * r)).epsilon(1e-10));
  }
}
