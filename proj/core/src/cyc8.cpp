#include "so3zi/cyc8.hpp"

#include "so3zi/number_theory.hpp"

#include <cmath>
#include <stdexcept>

namespace so3zi {

namespace {

const GaussInt kOnePlusI{1, 1};

// x / (1+i) = x (1-i) / 2, when exact
std::optional<GaussInt> halve(const GaussInt& x) {
  GaussInt t = x * GaussInt{1, -1};
  if (t.re % 2 != 0 || t.im % 2 != 0) return std::nullopt;
  return GaussInt{t.re / 2, t.im / 2};
}

}  // namespace

Cyc8::Cyc8(GaussInt a, GaussInt b, long long k) : a_(std::move(a)), b_(std::move(b)), k_(k) {
  if (k_ < 0) {
    GaussInt m = pow(kOnePlusI, static_cast<unsigned>(-k_));
    a_ *= m;
    b_ *= m;
    k_ = 0;
  }
  normalize();
}

void Cyc8::normalize() {
  if (is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    auto ha = halve(a_);
    if (!ha) break;
    auto hb = halve(b_);
    if (!hb) break;
    a_ = std::move(*ha);
    b_ = std::move(*hb);
    --k_;
  }
}

Cyc8 Cyc8::omega_pow(int e) {
  int r = ((e % 8) + 8) % 8;
  // w^r = i^{r/2} w^{r%2}
  GaussInt u = GaussInt::unit(r / 2);
  return r % 2 ? Cyc8(0, u) : Cyc8(u);
}

Cyc8 Cyc8::sqrt2() { return Cyc8(0, GaussInt{1, -1}); }

Cyc8 Cyc8::one_plus_i_pow(long long e) {
  if (e >= 0) return Cyc8(pow(kOnePlusI, static_cast<unsigned>(e)));
  return Cyc8(1, 0, -e);
}

std::optional<GaussInt> Cyc8::to_gauss_int() const {
  if (k_ != 0 || !b_.is_zero()) return std::nullopt;
  return a_;
}

std::complex<double> Cyc8::to_complex() const {
  const std::complex<double> w(std::sqrt(0.5), std::sqrt(0.5));
  std::complex<double> num = a_.to_complex() + b_.to_complex() * w;
  return num / std::pow(std::complex<double>(1.0, 1.0), static_cast<double>(k_));
}

std::string Cyc8::to_string() const {
  std::string s = "(" + a_.to_string() + ")+(" + b_.to_string() + ")w";
  if (k_) s = "[" + s + "]/(1+i)^" + std::to_string(k_);
  return s;
}

Cyc8 Cyc8::operator-() const {
  Cyc8 r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Cyc8 operator+(const Cyc8& x, const Cyc8& y) {
  long long K = std::max(x.k_, y.k_);
  GaussInt sx = pow(kOnePlusI, static_cast<unsigned>(K - x.k_));
  GaussInt sy = pow(kOnePlusI, static_cast<unsigned>(K - y.k_));
  return Cyc8(x.a_ * sx + y.a_ * sy, x.b_ * sx + y.b_ * sy, K);
}

Cyc8 operator*(const Cyc8& x, const Cyc8& y) {
  // (a1 + b1 w)(a2 + b2 w) = a1 a2 + i b1 b2 + (a1 b2 + a2 b1) w
  GaussInt a = x.a_ * y.a_ + GaussInt{0, 1} * x.b_ * y.b_;
  GaussInt b = x.a_ * y.b_ + y.a_ * x.b_;
  return Cyc8(std::move(a), std::move(b), x.k_ + y.k_);
}

long long ord(const GaussInt& nu, const Cyc8& x) {
  if (!x.b().is_zero()) throw std::invalid_argument("ord: element is not in Q(i)");
  long long v = ord(nu, x.a());
  if (v == kOrdInfinity) return v;
  return nu == GaussInt{1, 1} ? v - x.k() : v;
}

}  // namespace so3zi
