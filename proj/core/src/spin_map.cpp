#include "so3zi/spin_map.hpp"

namespace so3zi {

namespace {

Cyc8 half(const Cyc8& x) { return x * Cyc8(GaussInt{0, 1}, 0, 2); }  // i/(1+i)^2 = 1/2
Cyc8 times_i(const Cyc8& x) { return x * Cyc8(GaussInt{0, 1}); }
std::complex<double> half(const std::complex<double>& x) { return 0.5 * x; }
std::complex<double> times_i(const std::complex<double>& x) { return std::complex<double>(0, 1) * x; }

template <class T>
Mat3<T> formula(const Mat2<T>& g) {
  const T a2 = g.a * g.a, b2 = g.b * g.b, c2 = g.c * g.c, d2 = g.d * g.d;
  const T ab = g.a * g.b, cd = g.c * g.d, ac = g.a * g.c, bd = g.b * g.d;
  Mat3<T> r;
  r(0, 0) = half(a2 - c2 + d2 - b2);
  r(0, 1) = times_i(half(a2 - c2 + b2 - d2));
  r(0, 2) = cd - ab;
  r(1, 0) = times_i(half(b2 + d2 - a2 - c2));
  r(1, 1) = half(a2 + c2 + b2 + d2);
  r(1, 2) = times_i(ab + cd);
  r(2, 0) = bd - ac;
  r(2, 1) = -times_i(ac + bd);
  r(2, 2) = g.a * g.d + g.b * g.c;
  return r;
}

}  // namespace

Mat3<Cyc8> conj3(const CMat& g) { return formula(g); }
Mat3<Cyc8> tilde_conj(const CMat& g) { return formula(g); }
Mat3<std::complex<double>> conj3(const NMat& g) { return formula(g); }

Mat3<Cyc8> conj_eta(const CMat& g) {
  Mat3<Cyc8> m = formula(g);
  const Cyc8 i(GaussInt{0, 1}), mi(GaussInt{0, -1});
  // row 2 scaled by D_2^-1 = i, column 2 by D_2 = -i
  for (int j = 0; j < 3; ++j) m(1, j) = i * m(1, j);
  for (int r = 0; r < 3; ++r) m(r, 1) = m(r, 1) * mi;
  return m;
}

Mat3<double> conj_eta(const RMat& g) {
  NMat c{g.a, g.b, g.c, g.d};
  Mat3<std::complex<double>> m = formula(c);
  const std::complex<double> i(0, 1);
  Mat3<double> r;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::complex<double> v = m(a, b);
      if (a == 1) v *= i;
      if (b == 1) v *= -i;
      r(a, b) = v.real();
    }
  return r;
}

Mat3<double> eta_gram() {
  Mat3<double> j = Mat3<double>::identity();
  j(1, 1) = -1;
  return j;
}

}  // namespace so3zi
