#pragma once

#include "so3zi/gauss_int.hpp"

#include <limits>
#include <utility>
#include <vector>

namespace so3zi {

struct StandardForm {
  int unit_exp = 0;  // original = i^unit_exp * standard
  GaussInt standard;
};

// standard subset: Re > 0, Im >= 0
bool is_standard(const GaussInt& z);
StandardForm standardize(const GaussInt& z);

GaussInt gcd(const GaussInt& x, const GaussInt& y);

struct Bezout {
  GaussInt g, z, w;  // x*z - y*w == g
};
Bezout gcd_bezout(const GaussInt& x, const GaussInt& y);

bool is_prime(const BigInt& n);
bool is_standard_prime(const GaussInt& p);

inline constexpr long long kOrdInfinity = std::numeric_limits<long long>::max();

// nu-adic valuation; nu must be a standard prime
long long ord(const GaussInt& nu, const GaussInt& x);

struct Factorization {
  int unit_exp = 0;
  std::vector<std::pair<GaussInt, int>> primes;  // ordered by norm, then argument
};
Factorization factor(const GaussInt& z);
GaussInt recompose(const Factorization& f);

}  // namespace so3zi
