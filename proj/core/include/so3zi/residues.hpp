#pragma once

#include "so3zi/gauss_int.hpp"

#include <vector>

namespace so3zi {

// {r + s i : 0 <= r < 2^ceil(n/2), 0 <= s < 2^(n - ceil(n/2))}, s-major order
struct ResidueSystem {
  int n = 0;
  std::vector<GaussInt> reps;
};

ResidueSystem residue_reps(int n);

// representative of x modulo (1+i)^n in residue_reps(n)
GaussInt reduce_mod(const GaussInt& x, int n);

// if y is an associate of (1+i)^n, returns n, otherwise -1
int one_plus_i_power(const GaussInt& y);

// canonical representative of x mod y: the (1+i)^n system when it applies,
// otherwise minimal norm with ties to the smallest argument in [0, 2pi)
GaussInt reduce_mod_general(const GaussInt& x, const GaussInt& y);

bool congruent(const GaussInt& x, const GaussInt& y, int n);

std::vector<GaussInt> unit_group(int n);
std::vector<GaussInt> sq_kernel(int n);

// fixed section of the squaring map, n in {2,3,4}
GaussInt rt(int n, const GaussInt& q);

}  // namespace so3zi
