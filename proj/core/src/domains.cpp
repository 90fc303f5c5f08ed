#include "so3zi/domains.hpp"

#include <cmath>

namespace so3zi {

namespace {

using cd = std::complex<double>;

const std::array<cd, 3> kTriangle{cd(1, 0), cd(2, 0), cd(1, 1)};

void require_finite(const H3Point& z) {
  if (!std::isfinite(z.x.real()) || !std::isfinite(z.x.imag()) || !std::isfinite(z.y) || !(z.y > 0))
    throw std::invalid_argument("point must be finite with y > 0");
  if (std::abs(z.x) > 1e12 || z.y > 1e12 || z.y < 1e-12)
    throw std::invalid_argument("point is outside the supported coordinate range");
}

void require_finite(const H2Point& z) { require_finite(H3Point{cd(z.x, 0), z.y}); }

Region interval(double x, double lo, double hi, double eps) {
  return meet(region_from_slack(x - lo, eps), region_from_slack(hi - x, eps));
}

std::string gauss_label(const char* name, const GaussInt& w) { return std::string(name) + "(" + w.to_string() + ")"; }

// Picard and SL2Z bookkeeping
template <class T>
Mat2<T> upper(const T& n) {
  return {T(1), n, T(0), T(1)};
}

}  // namespace

std::optional<DomainKind> parse_domain_kind(std::string_view s) {
  if (s == "gamma-h3") return DomainKind::GammaH3;
  if (s == "picard-h3") return DomainKind::PicardH3;
  if (s == "gamma-int-h2") return DomainKind::GammaIntH2;
  if (s == "sl2z-h2") return DomainKind::SL2Z_H2;
  return std::nullopt;
}

const char* to_string(DomainKind k) {
  switch (k) {
    case DomainKind::GammaH3: return "gamma-h3";
    case DomainKind::PicardH3: return "picard-h3";
    case DomainKind::GammaIntH2: return "gamma-int-h2";
    default: return "sl2z-h2";
  }
}

Region in_G(std::complex<double> x, double eps) { return in_triangle(x, kTriangle, eps); }

Region in_F1(const H3Point& z, double eps) {
  // centres 1 + u(1+i) + v(1-i); only those within sqrt2 of x can bind
  double u0 = ((z.x.real() - 1) + z.x.imag()) / 2, v0 = ((z.x.real() - 1) - z.x.imag()) / 2;
  long long ku = std::llround(u0), kv = std::llround(v0);
  Region r = Region::Interior;
  for (long long u = ku - 2; u <= ku + 2; ++u)
    for (long long v = kv - 2; v <= kv + 2; ++v) {
      cd m(1.0 + double(u + v), double(u - v));
      if (std::norm(z.x - m) > 2.0 + eps) continue;
      r = meet(r, above_sphere(z, m, 2.0, eps));
    }
  return r;
}

Region contains(DomainKind kind, const H3Point& z, double eps) {
  switch (kind) {
    case DomainKind::GammaH3:
      return meet(in_G(z.x, eps), above_sphere(z, 1.0, 2.0, eps));
    case DomainKind::PicardH3: {
      Region r = interval(z.x.real(), -0.5, 0.5, eps);
      r = meet(r, interval(z.x.imag(), 0.0, 0.5, eps));
      return meet(r, above_sphere(z, 0.0, 1.0, eps));
    }
    default:
      throw std::invalid_argument(std::string(to_string(kind)) + " is a domain in H2, not H3");
  }
}

Region contains(DomainKind kind, const H2Point& z, double eps) {
  H3Point p{cd(z.x, 0), z.y};
  switch (kind) {
    case DomainKind::GammaIntH2:
      return meet(interval(z.x, 0.0, 2.0, eps), above_sphere(p, 1.0, 2.0, eps));
    case DomainKind::SL2Z_H2:
      return meet(interval(z.x, -0.5, 0.5, eps), above_sphere(p, 0.0, 1.0, eps));
    default:
      throw std::invalid_argument(std::string(to_string(kind)) + " is a domain in H3, not H2");
  }
}

LatticeElem translation(const GaussInt& w) {
  if (!w.divisible_by(GaussInt{1, 1})) throw std::invalid_argument("translation must lie in (1+i)Z[i]");
  return {0, 0, GMat{1, w, 0, 1}};
}

LatticeElem rotation() { return {0, 1, GMat{GaussInt{0, 1}, 0, 0, 1}}; }

LatticeElem rho() {
  static const LatticeElem r = mul(translation(GaussInt{1, -1}), rotation());
  return r;
}

LatticeElem inversion_at_one() {
  // (1/(1+i)) [[i,1],[i,3]] has isometric sphere centred at 3i; shift the centre to 1
  static const LatticeElem j = [] {
    LatticeElem g0{2, 0, GMat{GaussInt{0, 1}, 1, GaussInt{0, 1}, 3}};
    CMat m = g0.matrix() * to_cyc8(GMat{1, GaussInt{-1, 3}, 0, 1});
    if (!is_member_oracle(m)) throw std::logic_error("inversion element is not a lattice member");
    auto c = classify(m);
    if (!c) throw std::logic_error("inversion element failed classification");
    return *c;
  }();
  return j;
}

RealLatticeElem real_inversion_at_one() {
  static const RealLatticeElem j = [] {
    auto r = is_member_real({Mat2<BigInt>{1, -3, 1, -1}, 1});
    if (!r) throw std::logic_error("real inversion element is not a lattice member");
    return *r;
  }();
  return j;
}

namespace {

// (1+i)Z[i] translation moving x into the square with vertices 0, 2, 1+i, 1-i
GaussInt square_shift(cd x) {
  double u = ((x.real() - 1) + x.imag()) / 2, v = ((x.real() - 1) - x.imag()) / 2;
  long long ku = std::llround(u), kv = std::llround(v);
  // -(ku (1+i) + kv (1-i))
  return GaussInt{-(ku + kv), -(ku - kv)};
}

}  // namespace

StabilizerResult stabilizer_reduce(std::complex<double> x) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) || std::abs(x) > 1e12)
    throw std::invalid_argument("stabilizer_reduce: coordinate out of range");
  StabilizerResult out{identity_elem(), x, {}};
  GaussInt w = square_shift(x);
  if (!w.is_zero()) {
    out.element = translation(w);
    out.x = x + w.to_complex();
    out.word.push_back(gauss_label("T", w));
  }
  const NMat rn = to_numeric(rho().matrix());
  cd cur = out.x;
  for (int k = 0; k < 4; ++k) {
    if (in_G(cur) != Region::Outside) {
      for (int j = 0; j < k; ++j) {
        out.element = mul(rho(), out.element);
        out.word.push_back("rho");
      }
      out.x = cur;
      return out;
    }
    cur = act(rn, H3Point{cur, 1.0}).x;
  }
  throw ReductionError("stabilizer_reduce: no rotation lands in the triangle");
}

NMat numeric_matrix(const ReducingElement& e) {
  struct V {
    NMat operator()(const LatticeElem& g) const { return to_numeric(g.matrix()); }
    NMat operator()(const RealLatticeElem& g) const {
      RMat r = to_numeric(g.matrix());
      return {r.a, r.b, r.c, r.d};
    }
    NMat operator()(const GMat& g) const { return to_numeric(g); }
    NMat operator()(const Mat2<BigInt>& g) const {
      return g.map([](const BigInt& v) { return cd(v.convert_to<double>(), 0); });
    }
  };
  return std::visit(V{}, e);
}

namespace {

ReductionResult reduce_gamma(const H3Point& z, int cap) {
  LatticeElem total = identity_elem();
  H3Point p = z;
  ReductionResult res;
  const LatticeElem J = inversion_at_one();
  const NMat Jn = to_numeric(J.matrix());
  for (;;) {
    GaussInt w = square_shift(p.x);
    if (!w.is_zero()) {
      total = mul(translation(w), total);
      p.x += w.to_complex();
      res.word.push_back(gauss_label("T", w));
    }
    if (above_sphere(p, 1.0, 2.0) != Region::Outside) break;
    if (res.iterations >= cap) throw ReductionError("reduce: iteration cap exceeded");
    p = act(Jn, p);
    total = mul(J, total);
    res.word.push_back("J");
    ++res.iterations;
  }
  StabilizerResult s = stabilizer_reduce(p.x);
  // the translation part of s is trivial here; keep its word anyway
  total = mul(s.element, total);
  p.x = s.x;
  res.word.insert(res.word.end(), s.word.begin(), s.word.end());
  res.element = total;
  res.numeric = numeric_matrix(res.element);
  res.point = p;
  return res;
}

ReductionResult reduce_picard(const H3Point& z, int cap) {
  GMat total = GMat::identity();
  H3Point p = z;
  ReductionResult res;
  const GMat S{0, -1, 1, 0};
  for (;;) {
    long long n1 = std::llround(p.x.real()), n2 = std::llround(p.x.imag());
    if (n1 || n2) {
      GaussInt n{-n1, -n2};
      total = upper(n) * total;
      p.x += n.to_complex();
      res.word.push_back(gauss_label("T", n));
    }
    if (above_sphere(p, 0.0, 1.0) != Region::Outside) break;
    if (res.iterations >= cap) throw ReductionError("reduce: iteration cap exceeded");
    p = act(to_numeric(S), p);
    total = S * total;
    res.word.push_back("S");
    ++res.iterations;
  }
  if (p.x.imag() < 0) {
    const GMat F{GaussInt{0, 1}, 0, 0, GaussInt{0, -1}};  // x -> -x
    total = F * total;
    p.x = -p.x;
    res.word.push_back("F");
  }
  res.element = total;
  res.numeric = numeric_matrix(res.element);
  res.point = p;
  return res;
}

ReductionResult reduce_gamma_int(const H2Point& z, int cap) {
  RealLatticeElem total;
  H2Point p = z;
  ReductionResult res;
  const RealLatticeElem J = real_inversion_at_one();
  const RMat Jn = to_numeric(J.matrix());
  for (;;) {
    long long k = std::llround((p.x - 1) / 2);
    if (k) {
      total = real_mul({0, Mat2<BigInt>{1, BigInt(-2 * k), 0, 1}}, total);
      p.x -= 2.0 * double(k);
      res.word.push_back("T(" + std::to_string(-2 * k) + ")");
    }
    if (above_sphere(embed(p), 1.0, 2.0) != Region::Outside) break;
    if (res.iterations >= cap) throw ReductionError("reduce: iteration cap exceeded");
    p = act_h2(Jn, p);
    total = real_mul(J, total);
    res.word.push_back("J");
    ++res.iterations;
  }
  res.element = total;
  res.numeric = numeric_matrix(res.element);
  res.point = p;
  return res;
}

ReductionResult reduce_sl2z(const H2Point& z, int cap) {
  Mat2<BigInt> total = Mat2<BigInt>::identity();
  H2Point p = z;
  ReductionResult res;
  const Mat2<BigInt> S{0, -1, 1, 0};
  for (;;) {
    long long n = std::llround(p.x);
    if (n) {
      total = upper(BigInt(-n)) * total;
      p.x -= double(n);
      res.word.push_back("T(" + std::to_string(-n) + ")");
    }
    if (above_sphere(embed(p), 0.0, 1.0) != Region::Outside) break;
    if (res.iterations >= cap) throw ReductionError("reduce: iteration cap exceeded");
    p = act_h2(RMat{0, -1, 1, 0}, p);
    total = S * total;
    res.word.push_back("S");
    ++res.iterations;
  }
  res.element = total;
  res.numeric = numeric_matrix(res.element);
  res.point = p;
  return res;
}

}  // namespace

ReductionResult reduce(DomainKind kind, const H3Point& z, int cap) {
  require_finite(z);
  switch (kind) {
    case DomainKind::GammaH3: return reduce_gamma(z, cap);
    case DomainKind::PicardH3: return reduce_picard(z, cap);
    default:
      throw std::invalid_argument(std::string(to_string(kind)) + " is a domain in H2, not H3");
  }
}

ReductionResult reduce(DomainKind kind, const H2Point& z, int cap) {
  require_finite(z);
  switch (kind) {
    case DomainKind::GammaIntH2: return reduce_gamma_int(z, cap);
    case DomainKind::SL2Z_H2: return reduce_sl2z(z, cap);
    default:
      throw std::invalid_argument(std::string(to_string(kind)) + " is a domain in H3, not H2");
  }
}

bool relation_check(const H2Point& z) {
  // h = T_1 R^2 T_1^-1 = [[i, -2i], [0, -i]] acts by x -> 2 - x and is an involution
  static const NMat h_inv = to_numeric(GMat{GaussInt{0, -1}, GaussInt{0, 2}, 0, GaussInt{0, 1}});
  H3Point p = embed(z);
  H3Point q = act(h_inv, p);
  // real points sit on the edge [1,2] of the triangle, so only Outside is informative
  for (double t : {0.0, kEpsGeo, 2 * kEpsGeo}) {
    bool lhs = contains(DomainKind::GammaIntH2, z, t) != Region::Outside;
    bool rhs = contains(DomainKind::GammaH3, p, t) != Region::Outside ||
               contains(DomainKind::GammaH3, q, t) != Region::Outside;
    if (lhs == rhs) return true;
  }
  return false;
}

std::vector<std::array<double, 3>> boundary_samples(DomainKind kind, int n) {
  if (n < 1) throw std::invalid_argument("sample count must be positive");
  std::vector<std::array<double, 3>> out;
  out.reserve(static_cast<size_t>(n));
  switch (kind) {
    case DomainKind::GammaH3: {
      int L = 0;
      while ((L + 1) * (L + 2) / 2 < n) ++L;
      for (int a = 0; a <= L && int(out.size()) < n; ++a)
        for (int b = 0; a + b <= L && int(out.size()) < n; ++b) {
          double s = L ? double(a) / L : 0.0, t = L ? double(b) / L : 0.0;
          cd x = kTriangle[0] + s * (kTriangle[1] - kTriangle[0]) + t * (kTriangle[2] - kTriangle[0]);
          out.push_back({x.real(), x.imag(), std::sqrt(2.0 - std::norm(x - 1.0))});
        }
      break;
    }
    case DomainKind::PicardH3: {
      int k = 1;
      while (k * k < n) ++k;
      for (int a = 0; a < k && int(out.size()) < n; ++a)
        for (int b = 0; b < k && int(out.size()) < n; ++b) {
          double x1 = k > 1 ? -0.5 + double(a) / (k - 1) : 0.0;
          double x2 = k > 1 ? 0.5 * double(b) / (k - 1) : 0.0;
          out.push_back({x1, x2, std::sqrt(1.0 - x1 * x1 - x2 * x2)});
        }
      break;
    }
    case DomainKind::GammaIntH2:
      for (int a = 0; a < n; ++a) {
        double x = n > 1 ? 2.0 * a / (n - 1) : 1.0;
        out.push_back({x, 0.0, std::sqrt(2.0 - (x - 1) * (x - 1))});
      }
      break;
    case DomainKind::SL2Z_H2:
      for (int a = 0; a < n; ++a) {
        double x = n > 1 ? -0.5 + double(a) / (n - 1) : 0.0;
        out.push_back({x, 0.0, std::sqrt(1.0 - x * x)});
      }
      break;
  }
  return out;
}

}  // namespace so3zi
