#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace so3zi {

using BigInt = boost::multiprecision::cpp_int;

// a + b i with unbounded components
struct GaussInt {
  BigInt re;
  BigInt im;

  GaussInt() = default;
  GaussInt(long long r) : re(r), im(0) {}
  GaussInt(int r) : re(r), im(0) {}
  GaussInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussInt(long long r, long long i) : re(r), im(i) {}

  static GaussInt unit(int k);  // i^k
  static GaussInt parse(std::string_view s);

  BigInt norm() const { return re * re + im * im; }
  GaussInt conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const { return norm() == 1; }

  std::optional<GaussInt> divide_exact(const GaussInt& d) const;
  bool divisible_by(const GaussInt& d) const { return divide_exact(d).has_value(); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

  GaussInt operator-() const { return {-re, -im}; }
  GaussInt& operator+=(const GaussInt& o) { re += o.re; im += o.im; return *this; }
  GaussInt& operator-=(const GaussInt& o) { re -= o.re; im -= o.im; return *this; }
  GaussInt& operator*=(const GaussInt& o) {
    BigInt r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }
};

GaussInt pow(GaussInt base, unsigned e);

// nearest-integer quotient: x = q*y + r with N(r) <= N(y)/2
GaussInt round_div(const GaussInt& x, const GaussInt& y);

struct GaussIntLess {
  bool operator()(const GaussInt& a, const GaussInt& b) const {
    return a.re != b.re ? a.re < b.re : a.im < b.im;
  }
};

}  // namespace so3zi
