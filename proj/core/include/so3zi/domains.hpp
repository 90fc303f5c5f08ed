#pragma once

#include "so3zi/h3_geometry.hpp"
#include "so3zi/lattice.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace so3zi {

enum class DomainKind { GammaH3, PicardH3, GammaIntH2, SL2Z_H2 };

std::optional<DomainKind> parse_domain_kind(std::string_view s);
const char* to_string(DomainKind k);
inline bool is_h3(DomainKind k) { return k == DomainKind::GammaH3 || k == DomainKind::PicardH3; }

// wrong model space -> std::invalid_argument
Region contains(DomainKind kind, const H3Point& z, double eps = kEpsGeo);
Region contains(DomainKind kind, const H2Point& z, double eps = kEpsGeo);

// |x - d|^2 + y^2 >= 2 for every d in 1 + (1+i)Z[i]
Region in_F1(const H3Point& z, double eps = kEpsGeo);
// the triangle with vertices 1, 2, 1+i
Region in_G(std::complex<double> x, double eps = kEpsGeo);

// generators of the stabilizer of infinity
LatticeElem translation(const GaussInt& w);  // w in (1+i)Z[i]
LatticeElem rotation();                      // diag(w8, w8^-1): x -> i x
LatticeElem rho();                           // T_{1-i} R: rotation by pi/2 about 1
// element with isometric sphere |x - 1|^2 + y^2 = 2
LatticeElem inversion_at_one();
RealLatticeElem real_inversion_at_one();

struct StabilizerResult {
  LatticeElem element;
  std::complex<double> x;
  std::vector<std::string> word;
};
StabilizerResult stabilizer_reduce(std::complex<double> x);

using ReducingElement = std::variant<LatticeElem, RealLatticeElem, GMat, Mat2<BigInt>>;

struct ReductionResult {
  ReducingElement element;
  NMat numeric;  // numeric form of element
  std::variant<H3Point, H2Point> point;
  int iterations = 0;
  std::vector<std::string> word;  // generators in order of application
};

struct ReductionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kReduceCap = 10000;

ReductionResult reduce(DomainKind kind, const H3Point& z, int cap = kReduceCap);
ReductionResult reduce(DomainKind kind, const H2Point& z, int cap = kReduceCap);

NMat numeric_matrix(const ReducingElement& e);

// F_R(G_R) membership agrees with F(G) union h F(G), h: x -> 2 - x, up to the boundary band
bool relation_check(const H2Point& z);

// points on the lower boundary surface (CSV x1,x2,y)
std::vector<std::array<double, 3>> boundary_samples(DomainKind kind, int n);

}  // namespace so3zi
