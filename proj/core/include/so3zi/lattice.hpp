#pragma once

#include "so3zi/matrix.hpp"

#include <optional>
#include <vector>

namespace so3zi {

// alpha = alpha_prime / (w^delta (1+i)^(i/2)),  det alpha_prime = i^delta (1+i)^i
struct LatticeElem {
  int i = 0;      // 0 or 2
  int delta = 0;  // 0 or 1
  GMat alpha_prime = GMat::identity();

  CMat matrix() const;
  friend bool operator==(const LatticeElem&, const LatticeElem&) = default;
};

enum class XiClass { Xi1, Xi2, Xi12 };
const char* to_string(XiClass c);

struct CosetLabel {
  int i = 0;
  int delta = 0;
  int epsilon = 0;  // always 0 when i == 0
  friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
};

struct HeckeResult {
  GMat xi;  // det 1
  GaussInt m;
  GaussInt x;
};

// alpha = num / sqrt(2)^sqrt2_pow with integer num
struct SqrtTwoMatrix {
  Mat2<BigInt> num = Mat2<BigInt>::identity();
  int sqrt2_pow = 0;
};

// alpha_prime / sqrt(2)^delta, det alpha_prime = 2^delta
struct RealLatticeElem {
  int delta = 0;
  Mat2<BigInt> alpha_prime = Mat2<BigInt>::identity();

  SqrtTwoMatrix matrix() const { return {alpha_prime, delta}; }
  friend bool operator==(const RealLatticeElem&, const RealLatticeElem&) = default;
};

// det == 1 and tilde_conj(alpha) has Gaussian-integer entries
bool is_member_oracle(const CMat& alpha);

// structured membership through the (i, delta) normal form
std::optional<LatticeElem> classify(const CMat& alpha);

// first (i, delta) for which w^delta (1+i)^(i/2) alpha is integral, with odd
// entries when i == 2
std::optional<std::pair<int, int>> hyp_pair(const CMat& alpha);

XiClass xi_classify(const GMat& xi);

// alpha = xi * [[m, x], [0, N/m]], N/m standard, x canonical mod N/m
HeckeResult hecke_decompose(const GMat& alpha);

std::vector<CosetLabel> coset_labels();
LatticeElem coset_rep(const CosetLabel& label);
std::vector<LatticeElem> coset_reps();
CosetLabel coset_of(const LatticeElem& g);

LatticeElem identity_elem();
LatticeElem mul(const LatticeElem& g1, const LatticeElem& g2);
LatticeElem inv(const LatticeElem& g);

// a handful of elements of Xi12 used to build words
std::vector<GMat> xi12_generators();

// fixed element of Xi2 used by the coset representatives
GMat xi2_fixed();

std::optional<RealLatticeElem> is_member_real(const SqrtTwoMatrix& alpha);
CMat embed(const SqrtTwoMatrix& alpha);
RMat to_numeric(const SqrtTwoMatrix& alpha);
SqrtTwoMatrix normalized(SqrtTwoMatrix alpha);

RealLatticeElem real_mul(const RealLatticeElem& g1, const RealLatticeElem& g2);
RealLatticeElem real_inv(const RealLatticeElem& g);

}  // namespace so3zi
