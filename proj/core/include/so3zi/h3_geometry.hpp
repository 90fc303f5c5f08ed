#pragma once

#include "so3zi/matrix.hpp"

#include <array>
#include <complex>
#include <stdexcept>

namespace so3zi {

inline constexpr double kEpsGeo = 1e-9;

// x + y j, y > 0
struct H3Point {
  std::complex<double> x;
  double y = 1.0;
};

struct H2Point {
  double x = 0.0;
  double y = 1.0;
};

enum class Region { Interior, Boundary, Outside };
const char* to_string(Region r);

// from a signed slack s: > eps inside, |s| <= eps boundary
Region region_from_slack(double s, double eps = kEpsGeo);
// combines constraint results: Outside dominates, then Boundary
Region meet(Region a, Region b);

struct GeometryError : std::domain_error {
  using std::domain_error::domain_error;
};

// (az+b)(cz+d)^-1 for |det - 1| <= 1e-9
H3Point act(const NMat& g, const H3Point& z);
H2Point act_h2(const RMat& g, const H2Point& z);

double height_after(std::complex<double> c, std::complex<double> d, const H3Point& z);
// phi1(z) - phi1(gz)
double delta1(const NMat& g, const H3Point& z);

std::array<double, 3> iwasawa(const H3Point& z);
H3Point iwasawa_inverse(const std::array<double, 3>& t);

// half-plane test against the three edges; throws for degenerate triangles
Region in_triangle(std::complex<double> x, const std::array<std::complex<double>, 3>& v, double eps = kEpsGeo);
Region above_sphere(const H3Point& z, std::complex<double> m, double r2, double eps = kEpsGeo);

inline H3Point embed(const H2Point& z) { return {{z.x, 0.0}, z.y}; }

}  // namespace so3zi
