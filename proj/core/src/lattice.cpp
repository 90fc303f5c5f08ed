#include "so3zi/lattice.hpp"

#include "so3zi/number_theory.hpp"
#include "so3zi/residues.hpp"
#include "so3zi/spin_map.hpp"

#include <stdexcept>

namespace so3zi {

namespace {

const GaussInt kI{0, 1};

Cyc8 scale(int i, int delta) { return Cyc8::omega_pow(delta) * Cyc8::one_plus_i_pow(i / 2); }
Cyc8 inv_scale(int i, int delta) { return Cyc8::omega_pow(-delta) * Cyc8::one_plus_i_pow(-(i / 2)); }

std::optional<GMat> integral(const CMat& m) {
  auto a = m.a.to_gauss_int(), b = m.b.to_gauss_int(), c = m.c.to_gauss_int(), d = m.d.to_gauss_int();
  if (!a || !b || !c || !d) return std::nullopt;
  return GMat{*a, *b, *c, *d};
}

bool odd(const GaussInt& x) { return x.norm() % 2 == 1; }

int parity(const GaussInt& x) { return odd(x) ? 1 : 0; }

std::optional<GMat> exact_div(const GMat& m, const GaussInt& n) {
  auto a = m.a.divide_exact(n), b = m.b.divide_exact(n), c = m.c.divide_exact(n), d = m.d.divide_exact(n);
  if (!a || !b || !c || !d) return std::nullopt;
  return GMat{*a, *b, *c, *d};
}

int unit_exponent(const GaussInt& u) {
  for (int e = 0; e < 4; ++e)
    if (GaussInt::unit(e) == u) return e;
  return -1;
}

}  // namespace

CMat LatticeElem::matrix() const { return inv_scale(i, delta) * to_cyc8(alpha_prime); }

const char* to_string(XiClass c) {
  switch (c) {
    case XiClass::Xi1: return "Xi1";
    case XiClass::Xi2: return "Xi2";
    default: return "Xi12";
  }
}

bool is_member_oracle(const CMat& alpha) {
  if (!(alpha.det() == Cyc8(1))) return false;
  Mat3<Cyc8> t = tilde_conj(alpha);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!t(r, c).is_gauss_int()) return false;
  return true;
}

std::optional<std::pair<int, int>> hyp_pair(const CMat& alpha) {
  for (int i : {0, 2})
    for (int delta : {0, 1}) {
      auto ap = integral(scale(i, delta) * alpha);
      if (!ap) continue;
      if (i == 2 && !(odd(ap->a) && odd(ap->b) && odd(ap->c) && odd(ap->d))) continue;
      return std::pair{i, delta};
    }
  return std::nullopt;
}

XiClass xi_classify(const GMat& xi) {
  if (!(xi.det() == GaussInt(1))) throw std::invalid_argument("xi_classify: determinant is not 1");
  int a = parity(xi.a), b = parity(xi.b), c = parity(xi.c), d = parity(xi.d);
  if (b == c && a == d) return XiClass::Xi12;  // I or S mod (1+i)
  if (a == 1 && (b + d == 1)) return XiClass::Xi2;
  return XiClass::Xi1;
}

HeckeResult hecke_decompose(const GMat& alpha) {
  GaussInt N = alpha.det();
  if (N.is_zero()) throw std::invalid_argument("hecke_decompose: singular matrix");
  GaussInt g = gcd(alpha.a, alpha.c);
  StandardForm q = standardize(*N.divide_exact(g));
  GaussInt m = GaussInt::unit(q.unit_exp) * g;
  const GaussInt& nm = q.standard;
  GaussInt p = *alpha.a.divide_exact(m), r = *alpha.c.divide_exact(m);
  Bezout bz = gcd_bezout(p, r);  // p*s0 - r*q0 = 1
  const GaussInt& s0 = bz.z;
  const GaussInt& q0 = bz.w;
  GaussInt y = s0 * alpha.b - q0 * alpha.d;
  GaussInt x = reduce_mod_general(y, nm);
  // xi = alpha * [[m, x], [0, nm]]^-1 = alpha * [[nm, -x], [0, m]] / N
  GMat t = alpha * GMat{nm, -x, 0, m};
  auto xi = exact_div(t, N);
  if (!xi || !(xi->det() == GaussInt(1))) throw std::logic_error("hecke_decompose: inexact quotient");
  return {*xi, m, x};
}

GMat xi2_fixed() { return {1, 0, 1, 1}; }

std::vector<CosetLabel> coset_labels() {
  return {{0, 0, 0}, {0, 1, 0}, {2, 0, 0}, {2, 0, 1}, {2, 1, 0}, {2, 1, 1}};
}

LatticeElem coset_rep(const CosetLabel& l) {
  if (l.i == 0) return {0, l.delta, GMat{GaussInt::unit(l.delta), 0, 0, 1}};
  GMat right{GaussInt::unit(1 + l.delta), GaussInt::unit(l.epsilon), 0, 2};
  return {2, l.delta, xi2_fixed() * right};
}

std::vector<LatticeElem> coset_reps() {
  std::vector<LatticeElem> out;
  for (auto& l : coset_labels()) out.push_back(coset_rep(l));
  return out;
}

std::optional<LatticeElem> classify(const CMat& alpha) {
  if (!(alpha.det() == Cyc8(1))) return std::nullopt;
  auto hp = hyp_pair(alpha);
  if (!hp) return std::nullopt;
  auto [i, delta] = *hp;
  GMat ap = *integral(scale(i, delta) * alpha);
  HeckeResult h = hecke_decompose(ap);
  if (i == 0) {
    if (!(h.m == GaussInt::unit(delta)) || !h.x.is_zero()) return std::nullopt;
    if (xi_classify(h.xi) != XiClass::Xi12) return std::nullopt;
  } else {
    if (!(h.m == GaussInt::unit(1 + delta))) return std::nullopt;
    if (!(h.x == GaussInt(1) || h.x == kI)) return std::nullopt;
    if (xi_classify(h.xi) != XiClass::Xi2) return std::nullopt;
  }
  return LatticeElem{i, delta, ap};
}

CosetLabel coset_of(const LatticeElem& g) {
  if (g.i == 0) return {0, g.delta, 0};
  HeckeResult h = hecke_decompose(g.alpha_prime);
  int e = unit_exponent(h.x);
  if (e != 0 && e != 1) throw std::logic_error("coset_of: unexpected Hecke residue " + h.x.to_string());
  return {2, g.delta, e};
}

LatticeElem identity_elem() { return {}; }

LatticeElem mul(const LatticeElem& g1, const LatticeElem& g2) {
  auto r = classify(g1.matrix() * g2.matrix());
  if (!r) throw std::logic_error("mul: product left the lattice");
  return *r;
}

LatticeElem inv(const LatticeElem& g) {
  auto r = classify(g.matrix().adj());
  if (!r) throw std::logic_error("inv: inverse left the lattice");
  return *r;
}

std::vector<GMat> xi12_generators() {
  return {
      {1, GaussInt{1, 1}, 0, 1},   // T_{1+i}
      {1, GaussInt{1, -1}, 0, 1},  // T_{1-i}
      {0, -1, 1, 0},               // S
      {kI, 0, 0, -kI},             // diag(i, -i)
      {1, 0, GaussInt{1, 1}, 1},
  };
}

// real form

SqrtTwoMatrix normalized(SqrtTwoMatrix m) {
  while (m.sqrt2_pow < 0) {
    m.num = BigInt(2) * m.num;
    m.sqrt2_pow += 2;
  }
  auto even = [](const BigInt& v) { return v % 2 == 0; };
  while (m.sqrt2_pow >= 2 && even(m.num.a) && even(m.num.b) && even(m.num.c) && even(m.num.d)) {
    m.num = m.num.map([](const BigInt& v) { return BigInt(v / 2); });
    m.sqrt2_pow -= 2;
  }
  return m;
}

CMat embed(const SqrtTwoMatrix& m) {
  // 1/sqrt2 = w / (1+i)
  const Cyc8 inv_sqrt2(0, 1, 1);
  Cyc8 s(1);
  if (m.sqrt2_pow >= 0)
    for (int k = 0; k < m.sqrt2_pow; ++k) s *= inv_sqrt2;
  else
    for (int k = 0; k < -m.sqrt2_pow; ++k) s *= Cyc8::sqrt2();
  return m.num.map([&](const BigInt& v) { return s * Cyc8(GaussInt(v)); });
}

RMat to_numeric(const SqrtTwoMatrix& m) {
  double s = std::pow(2.0, -0.5 * m.sqrt2_pow);
  return m.num.map([&](const BigInt& v) { return s * v.convert_to<double>(); });
}

std::optional<RealLatticeElem> is_member_real(const SqrtTwoMatrix& in) {
  SqrtTwoMatrix m = normalized(in);
  if (m.sqrt2_pow > 1) return std::nullopt;
  const Mat2<BigInt>& a = m.num;
  auto par = [](const BigInt& v) { return v % 2 == 0 ? 0 : 1; };
  if (m.sqrt2_pow == 0) {
    if (a.det() != 1) return std::nullopt;
    // mod 2 image is I or S
    if (!(par(a.b) == par(a.c) && par(a.a) == par(a.d))) return std::nullopt;
    return RealLatticeElem{0, a};
  }
  if (a.det() != 2) return std::nullopt;
  // xi = a [[1,-1],[0,2]]^-1 = a [[2,1],[0,1]] / 2
  Mat2<BigInt> t = a * Mat2<BigInt>{2, 1, 0, 1};
  if (t.a % 2 || t.b % 2 || t.c % 2 || t.d % 2) return std::nullopt;
  Mat2<BigInt> xi = t.map([](const BigInt& v) { return BigInt(v / 2); });
  GMat gx = xi.map([](const BigInt& v) { return GaussInt(v); });
  if (xi_classify(gx) != XiClass::Xi2) return std::nullopt;
  return RealLatticeElem{1, a};
}

RealLatticeElem real_mul(const RealLatticeElem& g1, const RealLatticeElem& g2) {
  auto r = is_member_real({g1.alpha_prime * g2.alpha_prime, g1.delta + g2.delta});
  if (!r) throw std::logic_error("real_mul: product left the lattice");
  return *r;
}

RealLatticeElem real_inv(const RealLatticeElem& g) {
  // (A/sqrt2^d)^-1 = adj(A) sqrt2^d / 2^d = adj(A) / sqrt2^d
  auto r = is_member_real({g.alpha_prime.adj(), g.delta});
  if (!r) throw std::logic_error("real_inv: inverse left the lattice");
  return *r;
}

}  // namespace so3zi
