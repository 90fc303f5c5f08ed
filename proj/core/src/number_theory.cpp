#include "so3zi/number_theory.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <stdexcept>

namespace so3zi {

bool is_standard(const GaussInt& z) { return z.re > 0 && z.im >= 0; }

StandardForm standardize(const GaussInt& z) {
  if (z.is_zero()) return {0, z};
  // z = i^k * s  <=>  s = i^{-k} z
  GaussInt s = z;
  for (int k = 0; k < 4; ++k) {
    if (is_standard(s)) return {k, s};
    s *= GaussInt{0, -1};
  }
  throw std::logic_error("standardize: no standard associate");
}

GaussInt gcd(const GaussInt& x, const GaussInt& y) {
  if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  GaussInt a = x, b = y;
  while (!b.is_zero()) {
    GaussInt r = a - round_div(a, b) * b;
    a = std::move(b);
    b = std::move(r);
  }
  return standardize(a).standard;
}

Bezout gcd_bezout(const GaussInt& x, const GaussInt& y) {
  if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  // invariant: r0 = x*s0 + y*t0, r1 = x*s1 + y*t1
  GaussInt r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    GaussInt q = round_div(r0, r1);
    GaussInt r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  StandardForm sf = standardize(r0);
  GaussInt u = GaussInt::unit(-sf.unit_exp);
  return {sf.standard, s0 * u, -(t0 * u)};
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return boost::multiprecision::miller_rabin_test(n, 25);
}

bool is_standard_prime(const GaussInt& p) {
  if (!is_standard(p)) return false;
  if (p.im == 0) return p.re % 4 == 3 && is_prime(p.re);
  if (p.re == 0) return false;
  return is_prime(p.norm());
}

long long ord(const GaussInt& nu, const GaussInt& x) {
  if (!is_standard_prime(nu)) throw std::invalid_argument("ord: " + nu.to_string() + " is not a standard prime");
  if (x.is_zero()) return kOrdInfinity;
  long long k = 0;
  GaussInt t = x;
  while (auto q = t.divide_exact(nu)) {
    t = std::move(*q);
    ++k;
  }
  return k;
}

namespace {

// a^2 + b^2 = p for a prime p = 1 mod 4, a > b > 0
GaussInt two_squares(const BigInt& p) {
  for (BigInt b = 1; 2 * b * b < p; ++b) {
    BigInt a2 = p - b * b;
    BigInt a = boost::multiprecision::sqrt(a2);
    if (a * a == a2) return {a, b};
  }
  throw std::logic_error("two_squares: no representation");
}

bool arg_less(const GaussInt& a, const GaussInt& b) {
  // both standard, compare im/re
  return a.im * b.re < b.im * a.re;
}

}  // namespace

Factorization factor(const GaussInt& z) {
  if (z.is_zero()) throw std::domain_error("factor(0) is undefined");
  // rational primes dividing the norm, by trial division
  std::vector<BigInt> rp;
  BigInt n = z.norm();
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      rp.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) rp.push_back(n);

  std::vector<GaussInt> cands;
  for (const BigInt& p : rp) {
    if (p == 2) {
      cands.emplace_back(1, 1);
    } else if (p % 4 == 3) {
      cands.emplace_back(p, 0);
    } else {
      GaussInt ab = two_squares(p);
      cands.push_back(ab);
      cands.push_back(standardize(ab.conj()).standard);
    }
  }
  std::sort(cands.begin(), cands.end(), [](const GaussInt& a, const GaussInt& b) {
    BigInt na = a.norm(), nb = b.norm();
    return na != nb ? na < nb : arg_less(a, b);
  });

  Factorization f;
  GaussInt t = z;
  for (const GaussInt& p : cands) {
    int e = 0;
    while (auto q = t.divide_exact(p)) {
      t = std::move(*q);
      ++e;
    }
    if (e) f.primes.emplace_back(p, e);
  }
  if (!t.is_unit()) throw std::logic_error("factor: leftover non-unit");
  f.unit_exp = standardize(t).unit_exp;
  return f;
}

GaussInt recompose(const Factorization& f) {
  GaussInt r = GaussInt::unit(f.unit_exp);
  for (const auto& [p, e] : f.primes) r *= pow(p, static_cast<unsigned>(e));
  return r;
}

}  // namespace so3zi
