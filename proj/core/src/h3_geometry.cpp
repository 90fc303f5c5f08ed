#include "so3zi/h3_geometry.hpp"

#include <cmath>

namespace so3zi {

const char* to_string(Region r) {
  switch (r) {
    case Region::Interior: return "interior";
    case Region::Boundary: return "boundary";
    default: return "outside";
  }
}

Region region_from_slack(double s, double eps) {
  if (s > eps) return Region::Interior;
  if (s >= -eps) return Region::Boundary;
  return Region::Outside;
}

Region meet(Region a, Region b) {
  if (a == Region::Outside || b == Region::Outside) return Region::Outside;
  if (a == Region::Boundary || b == Region::Boundary) return Region::Boundary;
  return Region::Interior;
}

H3Point act(const NMat& g, const H3Point& z) {
  if (std::abs(g.det() - 1.0) > 1e-9) throw GeometryError("act: determinant is not 1");
  const std::complex<double> cx_d = g.c * z.x + g.d;
  const double D = std::norm(cx_d) + std::norm(g.c) * z.y * z.y;
  if (!(D > 1e-300) || !std::isfinite(D)) throw GeometryError("act: point is sent to infinity");
  // (ax+b) conj(cx+d) + a conj(c) y^2
  std::complex<double> num = (g.a * z.x + g.b) * std::conj(cx_d) + g.a * std::conj(g.c) * z.y * z.y;
  return {num / D, z.y / D};
}

H2Point act_h2(const RMat& g, const H2Point& z) {
  if (std::abs(g.det() - 1.0) > 1e-9) throw GeometryError("act_h2: determinant is not 1");
  const double cx_d = g.c * z.x + g.d;
  const double D = cx_d * cx_d + g.c * g.c * z.y * z.y;
  if (!(D > 1e-300) || !std::isfinite(D)) throw GeometryError("act_h2: point is sent to infinity");
  const double num = (g.a * z.x + g.b) * cx_d + g.a * g.c * z.y * z.y;
  return {num / D, z.y / D};
}

double height_after(std::complex<double> c, std::complex<double> d, const H3Point& z) {
  return z.y / (std::norm(c * z.x + d) + std::norm(c) * z.y * z.y);
}

double delta1(const NMat& g, const H3Point& z) {
  return -std::log(std::norm(g.c * z.x + g.d) + std::norm(g.c) * z.y * z.y);
}

std::array<double, 3> iwasawa(const H3Point& z) { return {-std::log(z.y), z.x.real(), z.x.imag()}; }

H3Point iwasawa_inverse(const std::array<double, 3>& t) { return {{t[1], t[2]}, std::exp(-t[0])}; }

namespace {

double cross(std::complex<double> u, std::complex<double> v) { return u.real() * v.imag() - u.imag() * v.real(); }

}  // namespace

Region in_triangle(std::complex<double> x, const std::array<std::complex<double>, 3>& v, double eps) {
  double area2 = cross(v[1] - v[0], v[2] - v[0]);
  if (std::abs(area2) < 1e-14) throw std::invalid_argument("in_triangle: degenerate triangle");
  double orient = area2 > 0 ? 1.0 : -1.0;
  Region r = Region::Interior;
  for (int k = 0; k < 3; ++k) {
    std::complex<double> p = v[k], q = v[(k + 1) % 3];
    // signed distance to edge pq, positive inside
    double s = orient * cross(q - p, x - p) / std::abs(q - p);
    r = meet(r, region_from_slack(s, eps));
  }
  return r;
}

Region above_sphere(const H3Point& z, std::complex<double> m, double r2, double eps) {
  if (!(r2 > 0)) throw std::invalid_argument("above_sphere: radius must be positive");
  return region_from_slack(std::norm(z.x - m) + z.y * z.y - r2, eps);
}

}  // namespace so3zi
