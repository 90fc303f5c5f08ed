#pragma once

#include "so3zi/cyc8.hpp"
#include "so3zi/gauss_int.hpp"

#include <array>
#include <complex>

namespace so3zi {

template <class T>
struct Mat2 {
  T a{}, b{}, c{}, d{};

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }
  T det() const { return a * d - b * c; }
  // adjugate; the inverse when det == 1
  Mat2 adj() const { return {d, -b, -c, a}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(const T& s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  template <class F>
  auto map(F f) const -> Mat2<decltype(f(a))> {
    return {f(a), f(b), f(c), f(d)};
  }
};

template <class T>
struct Mat3 {
  std::array<std::array<T, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = T(i == j ? 1 : 0);
    return r;
  }
  T& operator()(int i, int j) { return m[i][j]; }
  const T& operator()(int i, int j) const { return m[i][j]; }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }
  T det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T s = x.m[i][0] * y.m[0][j];
        s = s + x.m[i][1] * y.m[1][j];
        s = s + x.m[i][2] * y.m[2][j];
        r.m[i][j] = s;
      }
    return r;
  }
  friend bool operator==(const Mat3& x, const Mat3& y) { return x.m == y.m; }
};

using GMat = Mat2<GaussInt>;
using CMat = Mat2<Cyc8>;
using NMat = Mat2<std::complex<double>>;
using RMat = Mat2<double>;

inline CMat to_cyc8(const GMat& g) { return g.map([](const GaussInt& x) { return Cyc8(x); }); }
inline NMat to_numeric(const CMat& g) { return g.map([](const Cyc8& x) { return x.to_complex(); }); }
inline NMat to_numeric(const GMat& g) { return g.map([](const GaussInt& x) { return x.to_complex(); }); }

}  // namespace so3zi
