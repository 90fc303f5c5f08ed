#include "so3zi/residues.hpp"

#include "so3zi/number_theory.hpp"

#include <stdexcept>

namespace so3zi {

namespace {

BigInt pow2(int e) { return BigInt(1) << e; }

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt div_floor(const BigInt& a, const BigInt& m) {
  BigInt q = a / m;
  if (q * m != a && a < 0) --q;
  return q;
}

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("residue modulus exponent must be >= 1");
}

}  // namespace

ResidueSystem residue_reps(int n) {
  check_n(n);
  int hr = (n + 1) / 2, hs = n - hr;
  ResidueSystem rs{n, {}};
  long long R = 1LL << hr, S = 1LL << hs;
  rs.reps.reserve(static_cast<size_t>(R * S));
  for (long long s = 0; s < S; ++s)
    for (long long r = 0; r < R; ++r) rs.reps.emplace_back(r, s);
  return rs;
}

GaussInt reduce_mod(const GaussInt& x, int n) {
  check_n(n);
  int m = n / 2;
  BigInt q = pow2(m);
  if (n % 2 == 0) return {mod_floor(x.re, q), mod_floor(x.im, q)};
  // ideal (2^m (1+i)) contains 2^m (1+i) and 2^(m+1)
  BigInt t = div_floor(x.im, q);
  BigInt re = x.re - q * t, im = x.im - q * t;
  return {mod_floor(re, 2 * q), im};
}

bool congruent(const GaussInt& x, const GaussInt& y, int n) {
  return reduce_mod(x, n) == reduce_mod(y, n);
}

int one_plus_i_power(const GaussInt& y) {
  if (y.is_zero()) return -1;
  BigInt nrm = y.norm();
  int n = 0;
  while (nrm % 2 == 0) {
    nrm /= 2;
    ++n;
  }
  return nrm == 1 ? n : -1;
}

namespace {

int half_plane(const GaussInt& z) { return (z.im > 0 || (z.im == 0 && z.re > 0)) ? 0 : 1; }

bool arg_before(const GaussInt& a, const GaussInt& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return a.re * b.im - a.im * b.re > 0;
}

}  // namespace

GaussInt reduce_mod_general(const GaussInt& x, const GaussInt& y) {
  if (y.is_zero()) throw std::domain_error("reduction modulo zero");
  if (y.is_unit()) return 0;
  if (int n = one_plus_i_power(y); n > 0) return reduce_mod(x, n);
  GaussInt r0 = x - round_div(x, y) * y;
  GaussInt best = r0;
  BigInt bn = best.norm();
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b) {
      GaussInt c = r0 + GaussInt{a, b} * y;
      BigInt cn = c.norm();
      if (cn < bn || (cn == bn && !c.is_zero() && arg_before(c, best))) {
        best = c;
        bn = cn;
      }
    }
  return best;
}

std::vector<GaussInt> unit_group(int n) {
  std::vector<GaussInt> out;
  for (auto& r : residue_reps(n).reps)
    if (r.norm() % 2 == 1) out.push_back(r);
  return out;
}

std::vector<GaussInt> sq_kernel(int n) {
  if (n < 2) throw std::invalid_argument("sq_kernel needs n >= 2");
  std::vector<GaussInt> out;
  for (auto& u : unit_group(n))
    if (reduce_mod(u * u, n) == GaussInt(1)) out.push_back(u);
  return out;
}

GaussInt rt(int n, const GaussInt& q) {
  if (n < 2 || n > 4) throw std::invalid_argument("rt is only fixed for n in {2,3,4}");
  GaussInt r = reduce_mod(q, n);
  if (r == GaussInt(1)) return 1;
  if (n >= 3 && r == GaussInt(3)) return GaussInt{0, 1};
  throw std::invalid_argument("rt: " + q.to_string() + " is not a square unit mod (1+i)^" + std::to_string(n));
}

}  // namespace so3zi
