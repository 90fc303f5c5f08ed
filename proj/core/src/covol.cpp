#include "so3zi/covol.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace so3zi {

namespace {

constexpr double kPi = std::numbers::pi;

void require_s(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) throw std::invalid_argument("zeta needs s > 1");
}

// n^-s, by repeated multiplication when s is a small integer
double inv_pow(double n, double s, int si) {
  if (si > 0) {
    double p = 1.0;
    for (int k = 0; k < si; ++k) p *= n;
    return 1.0 / p;
  }
  return std::pow(n, -s);
}

}  // namespace

double zeta_qi_tail_bound(double s, double R) {
  require_s(s);
  return (kPi / 4 + 1) * std::pow(R, 1 - s) / (s - 1) + std::pow(R, -s) * (std::sqrt(R) + 2);
}

ZetaValue zeta_qi_truncated(double s, double R) {
  require_s(s);
  if (!(R >= 1)) throw std::invalid_argument("cutoff must be >= 1");
  const int si = (s == std::floor(s) && s <= 16) ? int(s) : 0;
  const long long Rn = static_cast<long long>(std::floor(R));
  // row a: sum over b >= 0 with a^2 + b^2 <= R, rows added largest-first
  const long long amax = static_cast<long long>(std::floor(std::sqrt(double(Rn))));
  double sum = 0.0, comp = 0.0;
  for (long long a = amax; a >= 1; --a) {
    long long bmax = static_cast<long long>(std::floor(std::sqrt(double(Rn - a * a))));
    while ((bmax + 1) * (bmax + 1) + a * a <= Rn) ++bmax;
    while (bmax > 0 && bmax * bmax + a * a > Rn) --bmax;
    double row = 0.0;
    for (long long b = bmax; b >= 0; --b) row += inv_pow(double(a * a + b * b), s, si);
    double y = row - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return {s, sum, zeta_qi_tail_bound(s, double(Rn)), double(Rn)};
}

ZetaValue zeta_qi(double s, double tol) {
  require_s(s);
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  double lo = 1, hi = 1;
  while (zeta_qi_tail_bound(s, hi) > tol) {
    lo = hi;
    hi *= 2;
    if (hi > 1e12) throw std::invalid_argument("tolerance too small for a direct lattice sum");
  }
  // bisect to the smallest integer cutoff meeting the bound
  while (hi - lo > 1) {
    double mid = std::floor(0.5 * (lo + hi));
    (zeta_qi_tail_bound(s, mid) > tol ? lo : hi) = mid;
  }
  return zeta_qi_truncated(s, hi);
}

double lambda_zeta_qi(double s, double tol) {
  static std::mutex mu;
  static std::map<std::pair<double, double>, double> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::pair{s, tol};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::pow(kPi, -s) * std::tgamma(s) * zeta_qi(s, tol).value).first;
  return it->second;
}

double lambda_zeta_q(double s) {
  require_s(s);
  return std::pow(kPi, -s / 2) * std::tgamma(s / 2) * std::riemann_zeta(s);
}

double covolume_sl_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  double v = 1.0;
  for (int k = 2; k <= n; ++k) v *= lambda_zeta_qi(k);
  return v;
}

double covolume_sl_n_real(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  double v = 1.0;
  for (int k = 2; k <= n; ++k) v *= lambda_zeta_q(k);
  return v;
}

// [SL2(Z[i]) : Xi12] = 3, [Gamma' : Xi12] = 6
double covolume_gamma() { return index_ratio_covolume(covolume_sl_n(2), 3, 6); }

// [SL2(Z) : (Xi12)_Z] = 3, [Gamma_Z' : (Xi12)_Z] = 2
double covolume_gamma_int() { return index_ratio_covolume(covolume_sl_n_real(2), 3, 2); }

double index_ratio_covolume(double base_covol, long idx_num, long idx_den) {
  if (idx_num <= 0 || idx_den <= 0) throw std::invalid_argument("indices must be positive");
  return base_covol * double(idx_num) / double(idx_den);
}

VolumeReport hyp_volume(DomainKind kind) {
  using cd = std::complex<double>;
  VolumeReport rep{kind, 0.0, 0.0};
  QuadResult q;
  switch (kind) {
    case DomainKind::GammaH3: {
      // floor f(x)^2 = 2 - |x-1|^2 over the triangle; volume element dx dy / y^3
      auto g = [](cd x) { return 0.5 / (2.0 - std::norm(x - 1.0)); };
      q = integrate_triangle(g, {cd(1, 0), cd(2, 0), cd(1, 1)}, 1e-10);
      break;
    }
    case DomainKind::PicardH3: {
      auto g = [](cd x) { return 0.5 / (1.0 - std::norm(x)); };
      QuadResult a = integrate_triangle(g, {cd(-0.5, 0), cd(0.5, 0), cd(0.5, 0.5)}, 1e-10);
      QuadResult b = integrate_triangle(g, {cd(-0.5, 0), cd(0.5, 0.5), cd(-0.5, 0.5)}, 1e-10);
      q = {a.value + b.value, a.error + b.error, a.evaluations + b.evaluations};
      break;
    }
    case DomainKind::GammaIntH2: {
      auto g = [](double x) { return 1.0 / std::sqrt(2.0 - (x - 1) * (x - 1)); };
      q = integrate_interval(g, 0.0, 2.0, 1e-12);
      break;
    }
    case DomainKind::SL2Z_H2: {
      auto g = [](double x) { return 1.0 / std::sqrt(1.0 - x * x); };
      q = integrate_interval(g, -0.5, 0.5, 1e-12);
      break;
    }
  }
  rep.volume = q.value;
  rep.error = q.error;
  return rep;
}

}  // namespace so3zi
