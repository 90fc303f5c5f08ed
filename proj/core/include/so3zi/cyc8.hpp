#pragma once

#include "so3zi/gauss_int.hpp"

#include <complex>
#include <optional>
#include <string>

namespace so3zi {

// (a + b w) / (1+i)^k in Z[w, 1/(1+i)], w = e^{i pi/4}, w^2 = i.
// Kept normalized: k == 0 or (1+i) does not divide both a and b.
class Cyc8 {
 public:
  Cyc8() = default;
  Cyc8(long long v) : a_(v) {}
  Cyc8(GaussInt a) : a_(std::move(a)) {}
  Cyc8(GaussInt a, GaussInt b, long long k = 0);

  static Cyc8 omega() { return Cyc8(0, 1); }
  static Cyc8 omega_pow(int e);      // w^e, any integer e
  static Cyc8 sqrt2();               // (1-i) w
  static Cyc8 one_plus_i_pow(long long e);  // (1+i)^e, e may be negative

  const GaussInt& a() const { return a_; }
  const GaussInt& b() const { return b_; }
  long long k() const { return k_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  // value as a Gaussian integer, if it is one
  std::optional<GaussInt> to_gauss_int() const;
  bool is_gauss_int() const { return to_gauss_int().has_value(); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyc8 operator-() const;
  friend Cyc8 operator+(const Cyc8& x, const Cyc8& y);
  friend Cyc8 operator-(const Cyc8& x, const Cyc8& y) { return x + (-y); }
  friend Cyc8 operator*(const Cyc8& x, const Cyc8& y);
  Cyc8& operator+=(const Cyc8& o) { return *this = *this + o; }
  Cyc8& operator-=(const Cyc8& o) { return *this = *this - o; }
  Cyc8& operator*=(const Cyc8& o) { return *this = *this * o; }
  friend bool operator==(const Cyc8& x, const Cyc8& y) {
    return x.k_ == y.k_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  void normalize();

  GaussInt a_{0};
  GaussInt b_{0};
  long long k_ = 0;
};

// valuation of an element with b == 0
long long ord(const GaussInt& nu, const Cyc8& x);

}  // namespace so3zi
