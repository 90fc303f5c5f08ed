#include "so3zi/quadrature.hpp"

#include <cmath>

namespace so3zi {

namespace {

constexpr std::array<double, 7> kGLx{0.0,
                                      -0.4058451513773971669066064, 0.4058451513773971669066064,
                                      -0.7415311855993944398638648, 0.7415311855993944398638648,
                                      -0.9491079123427585245261897, 0.9491079123427585245261897};
constexpr std::array<double, 7> kGLw{0.4179591836734693877551020,
                                      0.3818300505051189449503698, 0.3818300505051189449503698,
                                      0.2797053914892766679014678, 0.2797053914892766679014678,
                                      0.1294849661688696932706114, 0.1294849661688696932706114};

double gl7(const std::function<double(double)>& f, double a, double b, long& evals) {
  double h = 0.5 * (b - a), m = 0.5 * (a + b), s = 0.0;
  for (int k = 0; k < 7; ++k) s += kGLw[k] * f(m + h * kGLx[k]);
  evals += 7;
  return h * s;
}

void interval_rec(const std::function<double(double)>& f, double a, double b, double whole, double tol,
                  int depth, int max_depth, QuadResult& out) {
  double m = 0.5 * (a + b);
  double l = gl7(f, a, m, out.evaluations), r = gl7(f, m, b, out.evaluations);
  double diff = std::abs(l + r - whole);
  if (diff <= tol) {
    out.value += l + r;
    out.error += diff;
    return;
  }
  if (depth >= max_depth) throw QuadratureError("interval quadrature did not converge");
  interval_rec(f, a, m, l, 0.5 * tol, depth + 1, max_depth, out);
  interval_rec(f, m, b, r, 0.5 * tol, depth + 1, max_depth, out);
}

double radon7(const std::function<double(Vec2)>& f, const std::array<Vec2, 3>& v, long& evals) {
  static const double s15 = std::sqrt(15.0);
  static const double a1 = (6.0 - s15) / 21.0, a2 = (6.0 + s15) / 21.0;
  static const double w0 = 9.0 / 40.0, w1 = (155.0 - s15) / 1200.0, w2 = (155.0 + s15) / 1200.0;
  auto pt = [&](double l0, double l1, double l2) { return l0 * v[0] + l1 * v[1] + l2 * v[2]; };
  double s = w0 * f(pt(1.0 / 3, 1.0 / 3, 1.0 / 3));
  s += w1 * (f(pt(a1, a1, 1 - 2 * a1)) + f(pt(a1, 1 - 2 * a1, a1)) + f(pt(1 - 2 * a1, a1, a1)));
  s += w2 * (f(pt(a2, a2, 1 - 2 * a2)) + f(pt(a2, 1 - 2 * a2, a2)) + f(pt(1 - 2 * a2, a2, a2)));
  evals += 7;
  Vec2 e1 = v[1] - v[0], e2 = v[2] - v[0];
  double area = 0.5 * std::abs(e1.real() * e2.imag() - e1.imag() * e2.real());
  return area * s;
}

std::array<std::array<Vec2, 3>, 4> split(const std::array<Vec2, 3>& v) {
  Vec2 m01 = 0.5 * (v[0] + v[1]), m12 = 0.5 * (v[1] + v[2]), m20 = 0.5 * (v[2] + v[0]);
  return {{{v[0], m01, m20}, {m01, v[1], m12}, {m20, m12, v[2]}, {m01, m12, m20}}};
}

void triangle_rec(const std::function<double(Vec2)>& f, const std::array<Vec2, 3>& v, double whole, double tol,
                  int depth, int max_depth, QuadResult& out) {
  auto kids = split(v);
  std::array<double, 4> part{};
  double fine = 0.0;
  for (int k = 0; k < 4; ++k) {
    part[k] = radon7(f, kids[k], out.evaluations);
    fine += part[k];
  }
  double diff = std::abs(fine - whole);
  if (diff <= tol) {
    out.value += fine;
    out.error += diff;
    return;
  }
  if (depth >= max_depth) throw QuadratureError("triangle quadrature did not converge");
  for (int k = 0; k < 4; ++k) triangle_rec(f, kids[k], part[k], 0.25 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadResult integrate_interval(const std::function<double(double)>& f, double a, double b, double tol,
                              int max_depth) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  QuadResult out;
  double whole = gl7(f, a, b, out.evaluations);
  interval_rec(f, a, b, whole, tol, 0, max_depth, out);
  return out;
}

QuadResult integrate_triangle(const std::function<double(Vec2)>& f, const std::array<Vec2, 3>& v, double tol,
                              int max_depth) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  QuadResult out;
  double whole = radon7(f, v, out.evaluations);
  triangle_rec(f, v, whole, tol, 0, max_depth, out);
  return out;
}

}  // namespace so3zi
