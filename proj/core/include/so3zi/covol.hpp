#pragma once

#include "so3zi/domains.hpp"
#include "so3zi/quadrature.hpp"

namespace so3zi {

struct ZetaValue {
  double s = 0.0;
  double value = 0.0;
  double tail_bound = 0.0;
  double cutoff = 0.0;  // norm cutoff R of the partial sum
};

// bound on the sum of N(l)^-s over standard l with N(l) > R
double zeta_qi_tail_bound(double s, double R);

// sum over standard l (Re > 0, Im >= 0) with N(l) <= R
ZetaValue zeta_qi_truncated(double s, double R);
// smallest power-of-two-ish cutoff whose tail bound is <= tol
ZetaValue zeta_qi(double s, double tol);

// pi^-s Gamma(s) zeta_Q(i)(s), pi^-s/2 Gamma(s/2) zeta(s)
double lambda_zeta_qi(double s, double tol = 1e-8);
double lambda_zeta_q(double s);

double covolume_sl_n(int n);
double covolume_sl_n_real(int n);
double covolume_gamma();      // V_2 / 2
double covolume_gamma_int();  // (3/2) lambda_zeta_q(2) = pi/4

double index_ratio_covolume(double base_covol, long idx_num, long idx_den);

struct VolumeReport {
  DomainKind kind;
  double volume = 0.0;
  double error = 0.0;
};

// hyperbolic volume (area in H2) of the domain, by adaptive quadrature
VolumeReport hyp_volume(DomainKind kind);

}  // namespace so3zi
