#pragma once

#include <array>
#include <complex>
#include <functional>
#include <stdexcept>

namespace so3zi {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // sum of |coarse - fine| over accepted cells
  long evaluations = 0;
};

// adaptive bisection with a 7-point Gauss-Legendre rule
QuadResult integrate_interval(const std::function<double(double)>& f, double a, double b, double tol,
                              int max_depth = 40);

// adaptive midpoint subdivision with the 7-point degree-5 Radon rule
using Vec2 = std::complex<double>;
QuadResult integrate_triangle(const std::function<double(Vec2)>& f, const std::array<Vec2, 3>& v, double tol,
                              int max_depth = 14);

}  // namespace so3zi
