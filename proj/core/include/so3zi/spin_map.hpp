#pragma once

#include "so3zi/matrix.hpp"

namespace so3zi {

// coordinates with respect to the orthonormal basis beta of sl2(C).
// tilde_conj is the same quadratic formula, without any determinant condition.
Mat3<Cyc8> conj3(const CMat& g);
Mat3<Cyc8> tilde_conj(const CMat& g);
Mat3<std::complex<double>> conj3(const NMat& g);

// real form: the eta basis, D^-1 conj3(g) D with D = diag(1, -i, 1).
// Preserves J = diag(1, -1, 1).
Mat3<Cyc8> conj_eta(const CMat& g);
Mat3<double> conj_eta(const RMat& g);

Mat3<double> eta_gram();

}  // namespace so3zi
